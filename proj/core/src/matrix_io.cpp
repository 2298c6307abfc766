// matrix_io.cpp — see matrix_io.hpp.
#include "pwcalc/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pwcalc/errors.hpp"
#include "pwcalc/report.hpp"

namespace pwcalc {

using nlohmann::json;

static ParseError bad(const std::string& origin, const std::string& what) {
  return ParseError(origin + ": " + what);
}

static double finite_number(const json& j, const std::string& origin, const std::string& what) {
  if (!j.is_number()) throw bad(origin, what + " must be a number");
  double v = j.get<double>();
  if (!std::isfinite(v)) throw bad(origin, what + " must be finite");
  return v;
}

static Eigen::Index positive_index(const json& j, const std::string& origin,
                                   const std::string& what) {
  if (!j.is_number_integer()) throw bad(origin, what + " must be a positive integer");
  auto v = j.get<long long>();
  if (v < 1 || v > 4096) throw bad(origin, what + " out of range");
  return static_cast<Eigen::Index>(v);
}

MatrixFile parse_matrix_document(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw bad(origin, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw bad(origin, "top level must be an object");
  if (!doc.contains("name") || !doc["name"].is_string())
    throw bad(origin, "missing string field \"name\"");

  MatrixFile f;
  f.name = doc["name"].get<std::string>();

  Eigen::Index rows = 0, cols = 0;
  if (doc.contains("dim")) {
    if (doc.contains("rows") || doc.contains("cols"))
      throw bad(origin, "\"dim\" excludes \"rows\"/\"cols\"");
    rows = cols = positive_index(doc["dim"], origin, "\"dim\"");
    f.square_document = true;
  } else if (doc.contains("rows") && doc.contains("cols")) {
    rows = positive_index(doc["rows"], origin, "\"rows\"");
    cols = positive_index(doc["cols"], origin, "\"cols\"");
    f.square_document = false;
  } else {
    throw bad(origin, "need \"dim\" or both \"rows\" and \"cols\"");
  }

  if (!doc.contains("entries") || !doc["entries"].is_array())
    throw bad(origin, "missing array field \"entries\"");
  const json& entries = doc["entries"];
  if (static_cast<Eigen::Index>(entries.size()) != rows * cols)
    throw bad(origin, "\"entries\" must hold rows*cols pairs");

  f.entries.resize(rows, cols);
  Eigen::Index k = 0;
  for (const json& item : entries) {
    if (!item.is_array() || item.size() != 2)
      throw bad(origin, "each entry must be a [re, im] pair");
    double re = finite_number(item[0], origin, "entry");
    double im = finite_number(item[1], origin, "entry");
    f.entries(k / cols, k % cols) = Complex(re, im);
    ++k;
  }

  for (const char* key : {"herm_tol", "rank_tol"}) {
    if (!doc.contains(key)) continue;
    double v = finite_number(doc[key], origin, std::string("\"") + key + "\"");
    if (v <= 0.0) throw bad(origin, std::string("\"") + key + "\" must be positive");
    (std::string(key) == "herm_tol" ? f.herm_tol : f.rank_tol) = v;
  }
  return f;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw ParseError(path + ": read failed");
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError(path + ": cannot open for writing");
  out << text;
  out.flush();
  if (!out) throw ParseError(path + ": write failed");
}

MatrixFile read_matrix_file(const std::string& path) {
  return parse_matrix_document(read_text_file(path), path);
}

HermitianMatrix to_hermitian(const MatrixFile& f, double fallback_herm_tol) {
  if (!f.square_document || f.entries.rows() != f.entries.cols())
    throw ParseError(f.name + ": operand must be a square \"dim\" document");
  double tol = f.herm_tol.value_or(fallback_herm_tol);
  try {
    return HermitianMatrix(f.entries, tol);
  } catch (const PreconditionError& e) {
    // The file declares a Hermitian operand; failing that is a document defect.
    throw ParseError(f.name + ": " + e.what());
  }
}

std::string format_matrix_document(const std::string& name, const Matrix& m) {
  JsonEmitter e;
  e.begin_object();
  e.key("name");
  e.string_value(name);
  emit_matrix_fields(e, m);
  e.end_object();
  return e.take();
}

void write_matrix_file(const std::string& path, const std::string& name, const Matrix& m) {
  write_text_file(path, format_matrix_document(name, m));
}

}  // namespace pwcalc
