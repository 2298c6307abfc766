// pw.hpp — The two-variable functional calculus for PSD pairs.
//
// For PSD A, B the space splits as H = H0 ⊕ H1 with H0 = Ker(A+B). On H1 the pair
//   R = (A+B)^{-1/2} A (A+B)^{-1/2},   S = I − P0 − R
// is a commuting pair of contractions with R + S = I, and for a homogeneous f
//   f(A, B) = (A+B)^{1/2} ψ(R)|_{H1} (A+B)^{1/2},   ψ(t) = f(t, 1−t),
// with f(A, B) = 0 on H0. Square roots and partial inverses are taken on the
// numerical co-kernel only, so every operator below annihilates H0 exactly.
#pragma once

#include "pwcalc/homfun.hpp"
#include "pwcalc/spectral.hpp"

namespace pwcalc {

struct PWDecomposition {
  HermitianMatrix kernel_projector;  // P0, orthogonal projector onto Ker(A+B)
  HermitianMatrix sum_sqrt;          // (A+B)^{1/2} on the co-kernel, 0 on the kernel
  HermitianMatrix sum_pinv_sqrt;     // (A+B)^{-1/2} partial inverse
  HermitianMatrix r_op;              // R, eigenvalue-clipped into [0,1]
  HermitianMatrix s_op;              // S = I − P0 − R
  double rank_tol;                   // requested kernel tolerance (relative)
};

// Splits off the numerical kernel of A+B and builds (R, S). Requires A, B PSD within
// rank_tol · ||·||₂.
PWDecomposition decompose(const HermitianMatrix& a, const HermitianMatrix& b,
                          double rank_tol = default_rank_tol);

// f(A, B) for fn finite on the clustered spectrum of R inside H1. Open-quadrant
// functions additionally require A and B numerically invertible (min eigenvalue
// above inv_tol · ||·||₂).
HermitianMatrix pw_apply(const HermitianMatrix& a, const HermitianMatrix& b,
                         const HomogeneousFunction& fn, double rank_tol = default_rank_tol,
                         double inv_tol = default_inv_tol);

// Extended-real variant: clusters where ψ = +inf accumulate their congruence
// (A+B)^{1/2} P_λ (A+B)^{1/2} into the infinite part K instead of failing.
ExtendedOperator pw_apply_extended(const HermitianMatrix& a, const HermitianMatrix& b,
                                   const HomogeneousFunction& fn,
                                   double rank_tol = default_rank_tol);

}  // namespace pwcalc
