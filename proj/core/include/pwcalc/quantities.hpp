// quantities.hpp — Scalar quantities derived from the calculus: the Belavkin-Staszewski
// relative entropy, Renyi-type traces, and weighted operator means.
#pragma once

#include "pwcalc/pw.hpp"

namespace pwcalc {

// Relative infinity threshold for extended traces: the infinite part is live when
// ||K||₂ > default_trace_inf_rel · ||A+B||₂.
inline constexpr double default_trace_inf_rel = 1e-10;

// Tr h(A, B) with h(r, s) = r log(r/s). +inf exactly when Ker B differs from Ker(A+B).
ExtendedReal bs_relative_entropy(const HermitianMatrix& a, const HermitianMatrix& b,
                                 double rank_tol = default_rank_tol);

// Tr f_α(A, B) with f_α(r, s) = r^{1-α} s^α, α in (0,2]. +inf exactly when α > 1 and
// Ker A differs from Ker(A+B).
ExtendedReal renyi_trace(const HermitianMatrix& a, const HermitianMatrix& b, double alpha,
                         double rank_tol = default_rank_tol);

// The weighted matrix geometric mean A #_α B, α in (0,1).
HermitianMatrix weighted_mean(const HermitianMatrix& a, const HermitianMatrix& b, double alpha,
                              double rank_tol = default_rank_tol);

}  // namespace pwcalc
