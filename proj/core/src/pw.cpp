#include "pwcalc/pw.hpp"

#include <algorithm>
#include <cmath>

namespace pwcalc {

namespace {

// R eigenvalues may leave [0,1] by round-off amplified through the partial inverse;
// anything beyond this is a conditioning failure, not noise, and aborts.
constexpr double r_clip_guard = 1e-6;

void require_psd(const HermitianMatrix& m, double rank_tol, const char* label) {
  if (min_eigenvalue(m.mat()) < -rank_tol * std::max(1.0, m.norm2()))
    throw NotPSD(std::string("decompose: ") + label + " is not PSD within tolerance");
}

void require_invertible(const HermitianMatrix& m, double inv_tol, const char* label) {
  if (min_eigenvalue(m.mat()) <= inv_tol * m.norm2() || m.norm2() == 0.0)
    throw NotInvertible(std::string(label) +
                        " must be numerically invertible for an open-quadrant function");
}

// One spectral term of the calculus: an R-cluster with its congruence weight
// (A+B)^{1/2} P_λ (A+B)^{1/2} and its multiplicity inside H1.
struct SpectralTerm {
  double lambda;  // clamped into [0,1]
  Matrix weight;
  bool in_h1;
};

std::vector<SpectralTerm> spectral_terms(const PWDecomposition& d) {
  const Eigen::Index n = d.r_op.dim();
  const Matrix q1 = Matrix::Identity(n, n) - d.kernel_projector.mat();
  const auto rd = eig_hermitian(d.r_op);
  // Endpoint eigenvalues of R encode kernel structure (where one operand vanishes),
  // and the section may declare infinities exactly there. Eigensolvers return them
  // with O(eps) fuzz, so snap within the rank tolerance before ψ sees them.
  const double snap = d.rank_tol * std::max(1.0, rd.norm2());
  std::vector<SpectralTerm> terms;
  terms.reserve(rd.clusters().size());
  for (const auto& c : rd.clusters()) {
    // Multiplicity of the cluster inside H1; the kernel of A+B carries R = 0 and
    // must not be fed to ψ (the calculus assigns f(0,0) = 0 there, structurally).
    const double m1 = (q1 * c.projector).trace().real();
    SpectralTerm term;
    term.lambda = std::clamp(c.eigenvalue, 0.0, 1.0);
    if (term.lambda <= snap)
      term.lambda = 0.0;
    else if (term.lambda >= 1.0 - snap)
      term.lambda = 1.0;
    term.in_h1 = m1 >= 0.5;
    if (term.in_h1)
      term.weight = hermitize(d.sum_sqrt.mat() * c.projector * d.sum_sqrt.mat());
    terms.push_back(std::move(term));
  }
  return terms;
}

struct Accumulated {
  Matrix finite;
  Matrix infinite;
  bool any_infinite = false;
};

// Shared evaluation path for the finite and extended entry points, so that the finite
// part of pw_apply_extended is bit-identical to pw_apply whenever no infinity occurs.
Accumulated accumulate(const PWDecomposition& d, const HomogeneousFunction& fn) {
  const Eigen::Index n = d.r_op.dim();
  Accumulated acc{Matrix::Zero(n, n), Matrix::Zero(n, n), false};
  for (const auto& term : spectral_terms(d)) {
    if (!term.in_h1) continue;
    const ExtendedReal v = fn.section(term.lambda);
    if (v.is_infinite()) {
      acc.infinite += term.weight;
      acc.any_infinite = true;
    } else if (v.value() != 0.0) {
      acc.finite += v.value() * term.weight;
    }
  }
  return acc;
}

}  // namespace

PWDecomposition decompose(const HermitianMatrix& a, const HermitianMatrix& b, double rank_tol) {
  if (a.dim() != b.dim()) throw DimensionMismatch("decompose: dims differ");
  if (!(rank_tol > 0.0)) throw BadParameter("decompose: rank_tol must be positive");
  require_psd(a, rank_tol, "A");
  require_psd(b, rank_tol, "B");

  const Eigen::Index n = a.dim();
  const HermitianMatrix sum(a.mat() + b.mat(), a.herm_tol());
  const auto sd = eig_hermitian(sum);
  const double thr = rank_tol * sd.norm2();

  Matrix p0 = Matrix::Zero(n, n);
  Matrix sqrt_m = Matrix::Zero(n, n);
  Matrix pinv_m = Matrix::Zero(n, n);
  for (const auto& c : sd.clusters()) {
    if (c.eigenvalue <= thr) {
      p0 += c.projector;
    } else {
      sqrt_m += std::sqrt(c.eigenvalue) * c.projector;
      pinv_m += (1.0 / std::sqrt(c.eigenvalue)) * c.projector;
    }
  }

  const Matrix r_raw = hermitize(pinv_m * a.mat() * pinv_m);
  Eigen::SelfAdjointEigenSolver<Matrix> es(r_raw);
  if (es.info() != Eigen::Success) throw Error("eigenvalue solver failed");
  Matrix r = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double lam = es.eigenvalues()(k);
    if (lam < -r_clip_guard || lam > 1.0 + r_clip_guard)
      throw PreconditionViolation("decompose: R eigenvalue " + std::to_string(lam) +
                                  " is too far outside [0,1]");
    const double clipped = std::clamp(lam, 0.0, 1.0);
    if (clipped != 0.0) r += clipped * (es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint());
  }
  r = hermitize(r);
  const Matrix s = hermitize(Matrix::Identity(n, n) - p0 - r);

  const double herm_tol = a.herm_tol();
  return PWDecomposition{HermitianMatrix(hermitize(p0), herm_tol),
                         HermitianMatrix(hermitize(sqrt_m), herm_tol),
                         HermitianMatrix(hermitize(pinv_m), herm_tol),
                         HermitianMatrix(r, herm_tol),
                         HermitianMatrix(s, herm_tol),
                         rank_tol};
}

HermitianMatrix pw_apply(const HermitianMatrix& a, const HermitianMatrix& b,
                         const HomogeneousFunction& fn, double rank_tol, double inv_tol) {
  if (fn.domain() == Domain::open_quadrant) {
    require_invertible(a, inv_tol, "A");
    require_invertible(b, inv_tol, "B");
  }
  const auto d = decompose(a, b, rank_tol);
  const auto acc = accumulate(d, fn);
  if (acc.any_infinite)
    throw InfiniteValue("pw_apply: " + fn.name() +
                        " is infinite on the spectrum; use pw_apply_extended");
  return HermitianMatrix(hermitize(acc.finite), a.herm_tol());
}

ExtendedOperator pw_apply_extended(const HermitianMatrix& a, const HermitianMatrix& b,
                                   const HomogeneousFunction& fn, double rank_tol) {
  const auto d = decompose(a, b, rank_tol);
  const auto acc = accumulate(d, fn);
  return ExtendedOperator(HermitianMatrix(hermitize(acc.finite), a.herm_tol()),
                          HermitianMatrix(hermitize(acc.infinite), a.herm_tol()));
}

}  // namespace pwcalc
