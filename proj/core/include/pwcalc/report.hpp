// report.hpp — Deterministic JSON emission for machine reports and matrix documents.
//
// Keys keep insertion order, doubles print in fixed 17-significant-digit scientific
// notation, infinities print as the reserved string "+inf", and the byte stream is a
// pure function of the content. Stock JSON dumpers use shortest-round-trip floats,
// which is why this tiny emitter exists.
#pragma once

#include <string>
#include <vector>

#include "pwcalc/extended.hpp"
#include "pwcalc/hermitian.hpp"

namespace pwcalc {

// %.16e: one leading digit plus 16 fractional digits, enough to round-trip a double.
std::string format_double(double v);

class JsonEmitter {
 public:
  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(const std::string& k);
  void string_value(const std::string& s);
  void number_value(double v);
  void int_value(long long v);
  void bool_value(bool v);
  // A finite number, or the reserved token "+inf" as a JSON string.
  void extended_value(const ExtendedReal& x);
  // One complex entry as the inline pair [re, im].
  void pair_value(double re, double im);

  // Final document plus trailing newline. The emitter must be balanced.
  std::string take();

 private:
  struct Frame {
    bool is_object;
    int count;
  };
  void prepare_value();
  void indent(size_t depth);

  std::string out_;
  std::vector<Frame> stack_;
  bool key_pending_ = false;
};

// Shared matrix layout for reports and matrix files: "dim" for square documents,
// "rows"/"cols" otherwise, then row-major "entries" of [re, im] pairs.
void emit_matrix_fields(JsonEmitter& e, const Matrix& m);
void emit_named_matrix(JsonEmitter& e, const std::string& k, const Matrix& m);

}  // namespace pwcalc
