#include "pwcalc/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace pwcalc {

SpectralDecomposition::SpectralDecomposition(std::vector<SpectralCluster> clusters,
                                             double effective_tol, Eigen::Index dim)
    : clusters_(std::move(clusters)), cluster_tol_(effective_tol), dim_(dim) {}

double SpectralDecomposition::norm2() const {
  double n = 0.0;
  for (const auto& c : clusters_) n = std::max(n, std::abs(c.eigenvalue));
  return n;
}

void SpectralDecomposition::validate(const Matrix& source, double tol) const {
  const double bound = tol * static_cast<double>(dim_);
  Matrix sum = Matrix::Zero(dim_, dim_);
  Matrix recon = Matrix::Zero(dim_, dim_);
  for (const auto& c : clusters_) {
    sum += c.projector;
    recon += c.eigenvalue * c.projector;
  }
  if (spectral_norm(sum - Matrix::Identity(dim_, dim_)) > bound)
    throw PreconditionViolation("spectral clusters are not complete");
  for (size_t i = 0; i < clusters_.size(); ++i)
    for (size_t j = i + 1; j < clusters_.size(); ++j)
      if (spectral_norm(clusters_[i].projector * clusters_[j].projector) > bound)
        throw PreconditionViolation("spectral clusters are not orthogonal");
  const double scale = std::max(1.0, spectral_norm(source));
  if (spectral_norm(recon - source) > bound * scale)
    throw PreconditionViolation("spectral clusters do not reconstruct the input");
  for (size_t i = 1; i < clusters_.size(); ++i)
    if (clusters_[i].eigenvalue - clusters_[i - 1].eigenvalue <= cluster_tol_)
      throw PreconditionViolation("cluster eigenvalues are not separated");
}

SpectralDecomposition eig_hermitian(const HermitianMatrix& m, double cluster_tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m.mat());
  if (es.info() != Eigen::Success) throw Error("eigenvalue solver failed");
  const auto& vals = es.eigenvalues();
  const auto& vecs = es.eigenvectors();
  const Eigen::Index d = m.dim();
  const double tol = cluster_tol * std::max(1.0, m.norm2());

  std::vector<SpectralCluster> clusters;
  Eigen::Index i = 0;
  while (i < d) {
    Eigen::Index j = i + 1;
    while (j < d && vals(j) - vals(j - 1) <= tol) ++j;
    Matrix p = Matrix::Zero(d, d);
    double mean = 0.0;
    for (Eigen::Index k = i; k < j; ++k) {
      p += vecs.col(k) * vecs.col(k).adjoint();
      mean += vals(k);
    }
    mean /= static_cast<double>(j - i);
    clusters.push_back({mean, hermitize(p)});
    i = j;
  }
  return SpectralDecomposition(std::move(clusters), tol, d);
}

HermitianMatrix apply_scalar_function(const HermitianMatrix& m,
                                      const std::function<double(double)>& phi,
                                      double cluster_tol) {
  const auto sd = eig_hermitian(m, cluster_tol);
  Matrix out = Matrix::Zero(m.dim(), m.dim());
  for (const auto& c : sd.clusters()) {
    const double v = phi(c.eigenvalue);
    if (std::isnan(v)) throw DomainError("scalar function undefined at eigenvalue");
    if (std::isinf(v))
      throw InfiniteValue("scalar function infinite at eigenvalue; use the extended variant");
    out += v * c.projector;
  }
  return HermitianMatrix(hermitize(out), m.herm_tol());
}

ExtendedOperator apply_scalar_function_extended(const HermitianMatrix& m,
                                                const std::function<ExtendedReal(double)>& phi,
                                                double cluster_tol) {
  const auto sd = eig_hermitian(m, cluster_tol);
  Matrix f = Matrix::Zero(m.dim(), m.dim());
  Matrix k = Matrix::Zero(m.dim(), m.dim());
  for (const auto& c : sd.clusters()) {
    const ExtendedReal v = phi(c.eigenvalue);
    if (v.is_infinite())
      k += c.projector;
    else
      f += v.value() * c.projector;
  }
  return ExtendedOperator(HermitianMatrix(hermitize(f), m.herm_tol()),
                          HermitianMatrix(hermitize(k), m.herm_tol()));
}

HermitianMatrix joint_calculus_commuting(const HermitianMatrix& s, const HermitianMatrix& t,
                                         const std::function<double(double, double)>& f,
                                         double cluster_tol) {
  if (s.dim() != t.dim()) throw DimensionMismatch("joint_calculus_commuting: dims differ");
  const Matrix comm = s.mat() * t.mat() - t.mat() * s.mat();
  if (spectral_norm(comm) > 1e-9 * (1.0 + s.norm2() * t.norm2()))
    throw NotCommuting("joint_calculus_commuting: pair does not commute within tolerance");

  const auto sd = eig_hermitian(s, cluster_tol);
  const auto td = eig_hermitian(t, cluster_tol);
  Matrix out = Matrix::Zero(s.dim(), s.dim());
  for (const auto& cs : sd.clusters()) {
    for (const auto& ct : td.clusters()) {
      const double v = f(cs.eigenvalue, ct.eigenvalue);
      if (std::isnan(v)) throw DomainError("joint function undefined on the product spectrum");
      if (std::isinf(v)) throw InfiniteValue("joint function infinite on the product spectrum");
      if (v != 0.0) out += v * (cs.projector * ct.projector);
    }
  }
  return HermitianMatrix(hermitize(out), s.herm_tol());
}

HermitianMatrix pinv_power(const HermitianMatrix& m, double p, double rank_tol) {
  const auto sd = eig_hermitian(m);
  const double thr = rank_tol * sd.norm2();
  for (const auto& c : sd.clusters())
    if (c.eigenvalue < -thr) throw NotPSD("pinv_power: matrix has a negative eigenvalue");
  Matrix out = Matrix::Zero(m.dim(), m.dim());
  for (const auto& c : sd.clusters()) {
    if (c.eigenvalue <= thr) continue;  // numerical kernel contributes 0
    out += std::pow(c.eigenvalue, p) * c.projector;
  }
  return HermitianMatrix(hermitize(out), m.herm_tol());
}

Matrix kernel_projector(const HermitianMatrix& m, double rank_tol) {
  const auto sd = eig_hermitian(m);
  const double thr = rank_tol * std::max(1.0, sd.norm2());
  Matrix p = Matrix::Zero(m.dim(), m.dim());
  for (const auto& c : sd.clusters())
    if (std::abs(c.eigenvalue) <= thr) p += c.projector;
  return hermitize(p);
}

double similarity_identity_check(const Matrix& s, const HermitianMatrix& t,
                                 const std::function<double(double)>& g, double herm_tol) {
  if (s.rows() != s.cols() || s.rows() != t.dim())
    throw DimensionMismatch("similarity_identity_check: shape mismatch");
  Eigen::FullPivLU<Matrix> lu(s);
  if (!lu.isInvertible()) throw NotInvertible("similarity_identity_check: S is singular");
  const Matrix s_inv = lu.inverse();

  const Matrix c = s_inv * t.mat() * s;
  const double defect = spectral_norm(c - c.adjoint());
  if (defect > herm_tol * std::max(1.0, spectral_norm(c)))
    throw NotSelfAdjointConjugate("similarity_identity_check: S^-1 T S is not self-adjoint");

  const HermitianMatrix ch(hermitize(c), herm_tol);
  const Matrix lhs = apply_scalar_function(ch, g).mat();
  const Matrix rhs = s_inv * apply_scalar_function(t, g).mat() * s;
  return spectral_norm(lhs - rhs);
}

}  // namespace pwcalc
