// report.cpp — see report.hpp.
#include "pwcalc/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace pwcalc {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

static std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

void JsonEmitter::indent(size_t depth) { out_.append(2 * depth, ' '); }

void JsonEmitter::prepare_value() {
  if (key_pending_) {
    key_pending_ = false;
    return;
  }
  if (stack_.empty()) return;  // root value
  Frame& f = stack_.back();
  if (f.is_object) throw std::logic_error("JsonEmitter: value in object without key");
  if (f.count > 0) out_ += ',';
  out_ += '\n';
  indent(stack_.size());
  f.count++;
}

void JsonEmitter::key(const std::string& k) {
  if (stack_.empty() || !stack_.back().is_object || key_pending_)
    throw std::logic_error("JsonEmitter: key outside object");
  Frame& f = stack_.back();
  if (f.count > 0) out_ += ',';
  out_ += '\n';
  indent(stack_.size());
  out_ += escape(k);
  out_ += ": ";
  f.count++;
  key_pending_ = true;
}

void JsonEmitter::begin_object() {
  prepare_value();
  out_ += '{';
  stack_.push_back({true, 0});
}

void JsonEmitter::end_object() {
  if (stack_.empty() || !stack_.back().is_object || key_pending_)
    throw std::logic_error("JsonEmitter: unbalanced end_object");
  Frame f = stack_.back();
  stack_.pop_back();
  if (f.count > 0) {
    out_ += '\n';
    indent(stack_.size());
  }
  out_ += '}';
}

void JsonEmitter::begin_array() {
  prepare_value();
  out_ += '[';
  stack_.push_back({false, 0});
}

void JsonEmitter::end_array() {
  if (stack_.empty() || stack_.back().is_object)
    throw std::logic_error("JsonEmitter: unbalanced end_array");
  Frame f = stack_.back();
  stack_.pop_back();
  if (f.count > 0) {
    out_ += '\n';
    indent(stack_.size());
  }
  out_ += ']';
}

void JsonEmitter::string_value(const std::string& s) {
  prepare_value();
  out_ += escape(s);
}

void JsonEmitter::number_value(double v) {
  prepare_value();
  out_ += format_double(v);
}

void JsonEmitter::int_value(long long v) {
  prepare_value();
  out_ += std::to_string(v);
}

void JsonEmitter::bool_value(bool v) {
  prepare_value();
  out_ += v ? "true" : "false";
}

void JsonEmitter::extended_value(const ExtendedReal& x) {
  if (x.is_finite()) {
    number_value(x.value());
  } else {
    string_value("+inf");
  }
}

void JsonEmitter::pair_value(double re, double im) {
  prepare_value();
  out_ += '[';
  out_ += format_double(re);
  out_ += ", ";
  out_ += format_double(im);
  out_ += ']';
}

std::string JsonEmitter::take() {
  if (!stack_.empty() || key_pending_) throw std::logic_error("JsonEmitter: unbalanced document");
  return out_ + "\n";
}

void emit_matrix_fields(JsonEmitter& e, const Matrix& m) {
  if (m.rows() == m.cols()) {
    e.key("dim");
    e.int_value(m.rows());
  } else {
    e.key("rows");
    e.int_value(m.rows());
    e.key("cols");
    e.int_value(m.cols());
  }
  e.key("entries");
  e.begin_array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) e.pair_value(m(i, j).real(), m(i, j).imag());
  e.end_array();
}

void emit_named_matrix(JsonEmitter& e, const std::string& k, const Matrix& m) {
  e.key(k);
  e.begin_object();
  emit_matrix_fields(e, m);
  e.end_object();
}

}  // namespace pwcalc
