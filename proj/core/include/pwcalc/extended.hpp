// extended.hpp — Tagged extended-real value: a finite double or a structural +infinity.
//
// Infinite results are carried as a tag, never as IEEE inf, so downstream code and
// serialized reports can treat "+inf" as a reserved token.
#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "pwcalc/errors.hpp"

namespace pwcalc {

class ExtendedReal {
 public:
  ExtendedReal() = default;

  static ExtendedReal finite(double v) {
    if (!std::isfinite(v)) throw std::logic_error("ExtendedReal::finite given a non-finite value");
    ExtendedReal x;
    x.finite_ = true;
    x.value_ = v;
    return x;
  }

  static ExtendedReal plus_infinity() {
    ExtendedReal x;
    x.finite_ = false;
    x.value_ = 0.0;
    return x;
  }

  // Classifies a raw double: finite stays finite, +inf becomes the structural infinity,
  // NaN and -inf are rejected (they indicate an evaluation outside the declared domain).
  static ExtendedReal from_value(double v) {
    if (std::isfinite(v)) return finite(v);
    if (std::isinf(v) && v > 0) return plus_infinity();
    throw DomainError("scalar function produced NaN or -inf");
  }

  bool is_finite() const noexcept { return finite_; }
  bool is_infinite() const noexcept { return !finite_; }

  double value() const {
    if (!finite_) throw std::logic_error("ExtendedReal::value on +inf");
    return value_;
  }

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }

 private:
  bool finite_ = true;
  double value_ = 0.0;
};

// Scales by a nonnegative factor with the homogeneity conventions: 0 * anything = 0,
// positive * (+inf) = +inf.
inline ExtendedReal scale(double c, const ExtendedReal& x) {
  if (!(c >= 0.0)) throw std::logic_error("scale factor must be nonnegative");
  if (c == 0.0) return ExtendedReal::finite(0.0);
  if (x.is_infinite()) return ExtendedReal::plus_infinity();
  return ExtendedReal::finite(c * x.value());
}

}  // namespace pwcalc
