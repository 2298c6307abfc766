#include "pwcalc/routes.hpp"

#include <algorithm>
#include <cmath>

namespace pwcalc {

bool numerically_invertible(const HermitianMatrix& m, double inv_tol) {
  return m.norm2() != 0.0 && min_eigenvalue(m.mat()) > inv_tol * m.norm2();
}

namespace {

void require_invertible(const HermitianMatrix& m, double inv_tol, const char* label) {
  if (!numerically_invertible(m, inv_tol))
    throw NotInvertible(std::string(label) + " is not numerically invertible");
}

// Both halves of the perspective formula share this shape: pick the pivot operator P,
// conjugate the other one to M = P^{-1/2} Q P^{-1/2}, apply the section-derived scalar
// map, and conjugate back with P^{1/2}.
HermitianMatrix perspective(const HermitianMatrix& pivot, const HermitianMatrix& other,
                            const std::function<ExtendedReal(double)>& phi,
                            const std::string& fn_name) {
  const auto pd = eig_hermitian(pivot);
  const Eigen::Index n = pivot.dim();
  Matrix sqrt_m = Matrix::Zero(n, n);
  Matrix inv_sqrt_m = Matrix::Zero(n, n);
  for (const auto& c : pd.clusters()) {
    sqrt_m += std::sqrt(c.eigenvalue) * c.projector;
    inv_sqrt_m += (1.0 / std::sqrt(c.eigenvalue)) * c.projector;
  }

  const HermitianMatrix m(hermitize(inv_sqrt_m * other.mat() * inv_sqrt_m), pivot.herm_tol());
  const auto md = eig_hermitian(m);
  Matrix phi_m = Matrix::Zero(n, n);
  for (const auto& c : md.clusters()) {
    // Conjugation round-off can push a PSD spectrum a hair below 0.
    const ExtendedReal v = phi(std::max(0.0, c.eigenvalue));
    if (v.is_infinite())
      throw InfiniteValue(fn_name + " is infinite on the conjugated spectrum");
    phi_m += v.value() * c.projector;
  }
  return HermitianMatrix(hermitize(sqrt_m * phi_m * sqrt_m), pivot.herm_tol());
}

}  // namespace

HermitianMatrix perspective_left(const HermitianMatrix& a, const HermitianMatrix& b,
                                 const HomogeneousFunction& fn, double inv_tol) {
  if (a.dim() != b.dim()) throw DimensionMismatch("perspective_left: dims differ");
  require_invertible(a, inv_tol, "perspective_left: A");
  auto phi = [&fn](double t) { return fn.eval(1.0, t); };
  return perspective(a, b, phi, fn.name());
}

HermitianMatrix perspective_right(const HermitianMatrix& a, const HermitianMatrix& b,
                                  const HomogeneousFunction& fn, double inv_tol) {
  if (a.dim() != b.dim()) throw DimensionMismatch("perspective_right: dims differ");
  require_invertible(b, inv_tol, "perspective_right: B");
  auto phi = [&fn](double t) { return fn.eval(t, 1.0); };
  return perspective(b, a, phi, fn.name());
}

HermitianMatrix epsilon_regularized(const HermitianMatrix& a, const HermitianMatrix& b,
                                    const HomogeneousFunction& fn, double eps1, double eps2,
                                    double rank_tol, double inv_tol) {
  if (!(eps1 >= 0.0) || !(eps2 >= 0.0) || !(eps1 + eps2 > 0.0))
    throw BadParameter("epsilon_regularized: need eps1, eps2 >= 0 with eps1 + eps2 > 0");
  if (a.dim() != b.dim()) throw DimensionMismatch("epsilon_regularized: dims differ");
  const Eigen::Index n = a.dim();
  const HermitianMatrix a_eps(a.mat() + eps1 * Matrix::Identity(n, n), a.herm_tol());
  const HermitianMatrix b_eps(b.mat() + eps2 * Matrix::Identity(n, n), b.herm_tol());
  return pw_apply(a_eps, b_eps, fn, rank_tol, inv_tol);
}

std::vector<std::pair<double, double>> limit_study(const HermitianMatrix& a,
                                                   const HermitianMatrix& b,
                                                   const HomogeneousFunction& fn,
                                                   const std::vector<double>& eps_grid,
                                                   double rank_tol, double inv_tol) {
  if (!fn.continuous_on_closed())
    throw FunctionNotContinuous("limit_study: " + fn.name() +
                                " is not continuous on the closed quadrant");
  const Matrix base = pw_apply(a, b, fn, rank_tol, inv_tol).mat();
  std::vector<std::pair<double, double>> out;
  out.reserve(eps_grid.size());
  for (const double eps : eps_grid) {
    if (!(eps > 0.0)) throw BadParameter("limit_study: grid entries must be positive");
    const Matrix reg = epsilon_regularized(a, b, fn, eps, eps, rank_tol, inv_tol).mat();
    out.emplace_back(eps, spectral_norm(reg - base));
  }
  return out;
}

HermitianMatrix parallel_sum_direct(const HermitianMatrix& a, const HermitianMatrix& b,
                                    double inv_tol) {
  if (a.dim() != b.dim()) throw DimensionMismatch("parallel_sum_direct: dims differ");
  require_invertible(a, inv_tol, "parallel_sum_direct: A");
  require_invertible(b, inv_tol, "parallel_sum_direct: B");
  const Matrix sum = hermitize(a.mat() + b.mat());
  Eigen::LLT<Matrix> llt(sum);
  if (llt.info() != Eigen::Success)
    throw NotInvertible("parallel_sum_direct: A + B is not positive definite");
  const Matrix x = llt.solve(b.mat());
  return HermitianMatrix(hermitize(a.mat() * x), a.herm_tol());
}

}  // namespace pwcalc
