// convexity.hpp — Randomized checks and falsification searches for the transformer
// inequality f(V*AV, V*BV) ≼ V* f(A,B) V, joint convexity, and operator convexity of
// sections. Margins are min eigenvalues of the direction-adjusted slack; a check
// passes when margin >= -tol · (1 + ||slack||₂).
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pwcalc/pw.hpp"

namespace pwcalc {

enum class Direction { convex, concave };

struct Witness {
  Matrix a;
  Matrix b;
  std::optional<Matrix> v;  // transformer map; absent for section-scan witnesses
  std::uint64_t seed = 0;   // derived per-trial seed that produced the instance
  std::uint64_t trial = 0;
  double margin = 0.0;
};

struct CheckResult {
  bool passed = true;
  double margin = 0.0;  // min eigenvalue of the direction-adjusted slack (worst over trials)
  std::optional<Witness> witness;  // first violation found by a search
};

// Single-instance transformer check. V maps C^k -> C^d with d = dim A; for
// open-quadrant functions V must be an isometry (V*V = I within 1e-10) and A, B
// numerically invertible.
CheckResult transformer_check(const HomogeneousFunction& fn, const HermitianMatrix& a,
                              const HermitianMatrix& b, const Matrix& v, Direction direction,
                              double tol, double rank_tol = default_rank_tol,
                              double inv_tol = default_inv_tol);

// Slack of Σ w_i f(A_i, B_i) versus f(Σ w_i A_i, Σ w_i B_i), computed directly through
// the calculus (no reduction to the transformer form). Weights must be nonnegative and
// sum to 1 within 1e-12.
CheckResult joint_convexity_check(const HomogeneousFunction& fn,
                                  const std::vector<std::pair<HermitianMatrix, HermitianMatrix>>& pairs,
                                  const std::vector<double>& weights, Direction direction,
                                  double tol, double rank_tol = default_rank_tol,
                                  double inv_tol = default_inv_tol);

// Randomized midpoint operator-convexity scan for a scalar section on (a, b):
// ψ((X+Y)/2) ≼ (ψ(X)+ψ(Y))/2 over `trials` seeded Hermitian pairs with spectra in
// (a, b). Returns the worst margin and the first violating pair as witness.
CheckResult section_operator_convexity_scan(const std::function<double(double)>& psi, double a,
                                            double b, int dim, int trials, std::uint64_t seed,
                                            double tol);

// Random search for a violation of the convex-direction transformer inequality over
// seeded (A, B, V) instances cycling through `dims` (isometries with 1 <= k < d;
// open-quadrant and extended-valued functions get a +0.1·I invertibility shift).
// Returns the first witness found, or passed=true with the worst margin seen.
CheckResult falsify_transformer(const HomogeneousFunction& fn, const std::vector<int>& dims,
                                int trials, std::uint64_t seed, double tol,
                                double rank_tol = default_rank_tol,
                                double inv_tol = default_inv_tol);

}  // namespace pwcalc
