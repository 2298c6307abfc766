#include "pwcalc/convexity.hpp"

#include <cmath>

#include "pwcalc/random.hpp"
#include "pwcalc/spectral.hpp"

namespace pwcalc {

namespace {

CheckResult margin_result(const Matrix& slack_convex, Direction direction, double tol) {
  const Matrix adjusted = direction == Direction::convex ? slack_convex : Matrix(-slack_convex);
  CheckResult res;
  res.margin = min_eigenvalue(adjusted);
  res.passed = res.margin >= -tol * (1.0 + spectral_norm(adjusted));
  return res;
}

}  // namespace

CheckResult transformer_check(const HomogeneousFunction& fn, const HermitianMatrix& a,
                              const HermitianMatrix& b, const Matrix& v, Direction direction,
                              double tol, double rank_tol, double inv_tol) {
  if (a.dim() != b.dim() || v.rows() != a.dim())
    throw DimensionMismatch("transformer_check: shape mismatch");
  if (v.cols() < 1) throw BadParameter("transformer_check: V must have at least one column");
  if (fn.domain() == Domain::open_quadrant) {
    const Matrix gram = v.adjoint() * v;
    if (spectral_norm(gram - Matrix::Identity(v.cols(), v.cols())) > 1e-10)
      throw PreconditionViolation(
          "transformer_check: open-quadrant functions require an isometry V");
  }

  const Matrix fab = pw_apply(a, b, fn, rank_tol, inv_tol).mat();
  const HermitianMatrix a_c(hermitize(v.adjoint() * a.mat() * v), a.herm_tol());
  const HermitianMatrix b_c(hermitize(v.adjoint() * b.mat() * v), b.herm_tol());
  const Matrix fab_c = pw_apply(a_c, b_c, fn, rank_tol, inv_tol).mat();
  const Matrix slack_convex = hermitize(v.adjoint() * fab * v - fab_c);
  return margin_result(slack_convex, direction, tol);
}

CheckResult joint_convexity_check(
    const HomogeneousFunction& fn,
    const std::vector<std::pair<HermitianMatrix, HermitianMatrix>>& pairs,
    const std::vector<double>& weights, Direction direction, double tol, double rank_tol,
    double inv_tol) {
  if (pairs.empty()) throw BadParameter("joint_convexity_check: no pairs");
  if (weights.size() != pairs.size())
    throw BadWeights("joint_convexity_check: weight count mismatch");
  double wsum = 0.0;
  for (const double w : weights) {
    if (!(w >= 0.0)) throw BadWeights("joint_convexity_check: negative weight");
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > 1e-12)
    throw BadWeights("joint_convexity_check: weights must sum to 1");

  const Eigen::Index n = pairs.front().first.dim();
  Matrix mix_a = Matrix::Zero(n, n);
  Matrix mix_b = Matrix::Zero(n, n);
  Matrix mix_f = Matrix::Zero(n, n);
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first.dim() != n || pairs[i].second.dim() != n)
      throw DimensionMismatch("joint_convexity_check: pair dims differ");
    mix_a += weights[i] * pairs[i].first.mat();
    mix_b += weights[i] * pairs[i].second.mat();
    mix_f += weights[i] * pw_apply(pairs[i].first, pairs[i].second, fn, rank_tol, inv_tol).mat();
  }
  const HermitianMatrix abar(hermitize(mix_a));
  const HermitianMatrix bbar(hermitize(mix_b));
  const Matrix f_mix = pw_apply(abar, bbar, fn, rank_tol, inv_tol).mat();
  return margin_result(hermitize(mix_f - f_mix), direction, tol);
}

CheckResult section_operator_convexity_scan(const std::function<double(double)>& psi, double a,
                                            double b, int dim, int trials, std::uint64_t seed,
                                            double tol) {
  if (dim < 1 || trials < 1)
    throw BadParameter("section_operator_convexity_scan: need dim >= 1 and trials >= 1");
  if (!(a < b)) throw BadParameter("section_operator_convexity_scan: need a < b");

  auto check_interval = [&](const HermitianMatrix& m) {
    if (!(min_eigenvalue(m.mat()) > a) || !(max_eigenvalue(m.mat()) < b))
      throw SpectrumOutOfInterval("section_operator_convexity_scan: generated spectrum escaped");
  };

  CheckResult res;
  res.margin = 0.0;
  bool first = true;
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
    Rng rng(s);
    const HermitianMatrix x = random_hermitian_spectrum_in(dim, a, b, rng);
    const HermitianMatrix y = random_hermitian_spectrum_in(dim, a, b, rng);
    check_interval(x);
    check_interval(y);
    const HermitianMatrix mid(hermitize(0.5 * (x.mat() + y.mat())));
    const Matrix slack = hermitize(
        0.5 * (apply_scalar_function(x, psi).mat() + apply_scalar_function(y, psi).mat()) -
        apply_scalar_function(mid, psi).mat());
    const double margin = min_eigenvalue(slack);
    const bool ok = margin >= -tol * (1.0 + spectral_norm(slack));
    if (first || margin < res.margin) res.margin = margin;
    first = false;
    if (!ok && !res.witness) {
      res.passed = false;
      res.witness = Witness{x.mat(), y.mat(), std::nullopt, s,
                            static_cast<std::uint64_t>(i), margin};
    }
  }
  return res;
}

CheckResult falsify_transformer(const HomogeneousFunction& fn, const std::vector<int>& dims,
                                int trials, std::uint64_t seed, double tol, double rank_tol,
                                double inv_tol) {
  if (dims.empty()) throw BadParameter("falsify_transformer: no dims");
  for (const int d : dims)
    if (d < 2) throw BadParameter("falsify_transformer: dims must be >= 2");
  if (trials < 1) throw BadParameter("falsify_transformer: trials must be >= 1");

  const bool needs_shift =
      fn.domain() == Domain::open_quadrant || fn.takes_infinite_values();
  const double mu = needs_shift ? 0.1 : 0.0;

  CheckResult res;
  bool first = true;
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
    Rng rng(s);
    const int d = dims[static_cast<size_t>(i) % dims.size()];
    // Joint scaling cancels by homogeneity; the relative scale of A vs B matters,
    // so spread it over two decades.
    const double ratio = std::pow(10.0, rng.uniform(-1.0, 1.0));
    const HermitianMatrix a(ratio * random_psd(d, mu, rng).mat());
    const HermitianMatrix b(random_psd(d, mu, rng).mat());
    // k = d would make V unitary and the inequality an identity; never a witness.
    const Eigen::Index k = 1 + static_cast<Eigen::Index>(rng.integer(static_cast<std::uint64_t>(d - 1)));
    const Matrix v = random_isometry(d, k, rng);
    const CheckResult one =
        transformer_check(fn, a, b, v, Direction::convex, tol, rank_tol, inv_tol);
    if (first || one.margin < res.margin) res.margin = one.margin;
    first = false;
    if (!one.passed) {
      res.passed = false;
      res.witness =
          Witness{a.mat(), b.mat(), v, s, static_cast<std::uint64_t>(i), one.margin};
      return res;
    }
  }
  return res;
}

}  // namespace pwcalc
