// errors.hpp — Exception taxonomy: math/precondition failures vs. input parse failures.
#pragma once

#include <stdexcept>
#include <string>

namespace pwcalc {

// Root of everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Violated mathematical preconditions and domain errors. The CLI maps these to exit code 2.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed or unreadable input documents. The CLI maps these to exit code 3.
class ParseError : public Error {
 public:
  using Error::Error;
};

class NonHermitianInput : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotPSD : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DimensionMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotCommuting : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DomainError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class InfiniteValue : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotInvertible : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotSelfAdjointConjugate : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class UnknownName : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class BadParameter : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class BadWeights : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class FunctionNotContinuous : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class SpectrumOutOfInterval : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class PreconditionViolation : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace pwcalc
