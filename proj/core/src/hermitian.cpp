#include "pwcalc/hermitian.hpp"

#include <Eigen/SVD>

namespace pwcalc {

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

double min_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(hermitian), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw Error("eigenvalue solver failed");
  return es.eigenvalues()(0);
}

double max_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(hermitian), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw Error("eigenvalue solver failed");
  return es.eigenvalues()(es.eigenvalues().size() - 1);
}

HermitianMatrix::HermitianMatrix(Matrix entries, double herm_tol) : herm_tol_(herm_tol) {
  if (entries.rows() != entries.cols())
    throw DimensionMismatch("HermitianMatrix: input is " + std::to_string(entries.rows()) + "x" +
                            std::to_string(entries.cols()));
  if (entries.rows() == 0) throw BadParameter("HermitianMatrix: dim must be >= 1");
  const double norm = spectral_norm(entries);
  const double defect = spectral_norm(entries - entries.adjoint());
  if (defect > herm_tol * std::max(1.0, norm))
    throw NonHermitianInput("HermitianMatrix: symmetrization defect " + std::to_string(defect) +
                            " exceeds tolerance");
  m_ = hermitize(entries);
  norm2_ = spectral_norm(m_);
}

HermitianMatrix HermitianMatrix::identity(Eigen::Index dim) {
  return HermitianMatrix(Matrix::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::zero(Eigen::Index dim) {
  return HermitianMatrix(Matrix::Zero(dim, dim));
}

ExtendedOperator::ExtendedOperator(HermitianMatrix finite_part, HermitianMatrix infinite_part)
    : finite_(std::move(finite_part)), infinite_(std::move(infinite_part)) {
  if (finite_.dim() != infinite_.dim())
    throw DimensionMismatch("ExtendedOperator: finite and infinite parts differ in dim");
  const double floor = -default_rank_tol * std::max(1.0, infinite_.norm2());
  if (min_eigenvalue(infinite_.mat()) < floor)
    throw NotPSD("ExtendedOperator: infinite part is not PSD");
}

ExtendedReal ExtendedOperator::trace(double inf_tol) const {
  if (has_infinite_part(inf_tol)) return ExtendedReal::plus_infinity();
  return ExtendedReal::finite(finite_.mat().trace().real());
}

}  // namespace pwcalc
