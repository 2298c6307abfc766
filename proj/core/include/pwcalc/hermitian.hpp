// hermitian.hpp — Dense complex Hermitian matrices with tolerance metadata,
// plus the small matrix helpers the rest of the library leans on.
#pragma once

#include <Eigen/Dense>
#include <complex>

#include "pwcalc/errors.hpp"
#include "pwcalc/extended.hpp"

namespace pwcalc {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Complex = std::complex<double>;

inline constexpr double default_herm_tol = 1e-8;
inline constexpr double default_rank_tol = 1e-10;
inline constexpr double default_cluster_tol = 1e-10;
inline constexpr double default_inv_tol = 1e-8;

// Largest singular value.
double spectral_norm(const Matrix& m);

// (M + M†)/2. Exactly Hermitian entrywise.
Matrix hermitize(const Matrix& m);

// Extremal eigenvalues of a Hermitian matrix (the argument is symmetrized first).
double min_eigenvalue(const Matrix& hermitian);
double max_eigenvalue(const Matrix& hermitian);

// Validated Hermitian carrier. Construction symmetrizes and records the spectral norm.
class HermitianMatrix {
 public:
  // Throws NonHermitianInput when ||M - M†||₂ > herm_tol · max(1, ||M||₂),
  // DimensionMismatch for non-square input, BadParameter for dim 0.
  explicit HermitianMatrix(Matrix entries, double herm_tol = default_herm_tol);

  Eigen::Index dim() const { return m_.rows(); }
  const Matrix& mat() const { return m_; }
  double herm_tol() const { return herm_tol_; }
  double norm2() const { return norm2_; }

  static HermitianMatrix identity(Eigen::Index dim);
  static HermitianMatrix zero(Eigen::Index dim);

 private:
  Matrix m_;
  double herm_tol_;
  double norm2_;
};

// Finite part F plus a structural +inf carried on the range of a PSD matrix K.
// Entries of F and K are always finite; the infinity lives in the tag, not in IEEE values.
class ExtendedOperator {
 public:
  ExtendedOperator(HermitianMatrix finite_part, HermitianMatrix infinite_part);

  const HermitianMatrix& finite_part() const { return finite_; }
  const HermitianMatrix& infinite_part() const { return infinite_; }

  // The operator is genuinely extended when ||K||₂ exceeds inf_tol.
  bool has_infinite_part(double inf_tol) const { return infinite_.norm2() > inf_tol; }

  // Tr F, or +inf when the infinite part is live at the given tolerance.
  ExtendedReal trace(double inf_tol) const;

 private:
  HermitianMatrix finite_;
  HermitianMatrix infinite_;
};

}  // namespace pwcalc
