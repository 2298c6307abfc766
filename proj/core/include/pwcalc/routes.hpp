// routes.hpp — Alternative evaluation routes for f(A, B) and their agreement studies:
// the two perspective formulas for invertible inputs, epsilon-regularized limits,
// and the direct closed form for the parallel sum.
#pragma once

#include <utility>
#include <vector>

#include "pwcalc/pw.hpp"

namespace pwcalc {

// The gate the perspective routes apply to their pivot operand:
// min eigenvalue > inv_tol · ‖M‖₂ (and M ≠ 0).
bool numerically_invertible(const HermitianMatrix& m, double inv_tol = default_inv_tol);

// A^{1/2} φ(A^{-1/2} B A^{-1/2}) A^{1/2} with φ(t) = f(1, t). Requires A numerically
// invertible and φ finite on the spectrum of A^{-1/2} B A^{-1/2}.
HermitianMatrix perspective_left(const HermitianMatrix& a, const HermitianMatrix& b,
                                 const HomogeneousFunction& fn,
                                 double inv_tol = default_inv_tol);

// B^{1/2} g(B^{-1/2} A B^{-1/2}) B^{1/2} with g(t) = f(t, 1). Requires B numerically
// invertible.
HermitianMatrix perspective_right(const HermitianMatrix& a, const HermitianMatrix& b,
                                  const HomogeneousFunction& fn,
                                  double inv_tol = default_inv_tol);

// f(A + eps1·I, B + eps2·I). Requires eps1, eps2 >= 0 with eps1 + eps2 > 0.
HermitianMatrix epsilon_regularized(const HermitianMatrix& a, const HermitianMatrix& b,
                                    const HomogeneousFunction& fn, double eps1, double eps2,
                                    double rank_tol = default_rank_tol,
                                    double inv_tol = default_inv_tol);

// For each ε in the grid, ||f(A+εI, B+εI) − f(A, B)||₂, in grid order. Requires fn
// continuous on the closed quadrant; otherwise the regularized values need not
// converge to the exact ones and the table would be noise.
std::vector<std::pair<double, double>> limit_study(const HermitianMatrix& a,
                                                   const HermitianMatrix& b,
                                                   const HomogeneousFunction& fn,
                                                   const std::vector<double>& eps_grid,
                                                   double rank_tol = default_rank_tol,
                                                   double inv_tol = default_inv_tol);

inline std::vector<double> default_eps_grid() {
  return {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
}

// A (A+B)^{-1} B for numerically invertible A, B. Equals (A^{-1} + B^{-1})^{-1}.
HermitianMatrix parallel_sum_direct(const HermitianMatrix& a, const HermitianMatrix& b,
                                    double inv_tol = default_inv_tol);

}  // namespace pwcalc
