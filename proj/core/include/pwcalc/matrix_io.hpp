// matrix_io.hpp — JSON matrix documents: load, validate, save.
//
// A document is an object with "name", a shape ("dim" for square, or "rows"/"cols"),
// and row-major "entries" of [re, im] pairs; square documents may carry "herm_tol"
// and "rank_tol" overrides. Every structural defect, including a non-Hermitian
// operand where a Hermitian one is required, is a ParseError: the file itself is
// bad, not the mathematics on it.
#pragma once

#include <optional>
#include <string>

#include "pwcalc/hermitian.hpp"

namespace pwcalc {

struct MatrixFile {
  std::string name;
  Matrix entries;
  bool square_document = true;  // declared with "dim", not "rows"/"cols"
  std::optional<double> herm_tol;
  std::optional<double> rank_tol;
};

// origin labels error messages (usually the file path).
MatrixFile parse_matrix_document(const std::string& text, const std::string& origin);
MatrixFile read_matrix_file(const std::string& path);

// Operand view of a document. ParseError if the document is not square or not
// Hermitian under its own herm_tol (falling back to the given one).
HermitianMatrix to_hermitian(const MatrixFile& f, double fallback_herm_tol = default_herm_tol);

std::string format_matrix_document(const std::string& name, const Matrix& m);
void write_matrix_file(const std::string& path, const std::string& name, const Matrix& m);

// Raw file text, ParseError on I/O failure. Used for byte-level report checks too.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace pwcalc
