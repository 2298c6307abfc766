#include "pwcalc/quantities.hpp"

#include <algorithm>

namespace pwcalc {

namespace {

double trace_inf_tol(const HermitianMatrix& a, const HermitianMatrix& b) {
  return default_trace_inf_rel * spectral_norm(a.mat() + b.mat());
}

}  // namespace

ExtendedReal bs_relative_entropy(const HermitianMatrix& a, const HermitianMatrix& b,
                                 double rank_tol) {
  const ExtendedOperator ext = pw_apply_extended(a, b, entropy_kernel(), rank_tol);
  return ext.trace(trace_inf_tol(a, b));
}

ExtendedReal renyi_trace(const HermitianMatrix& a, const HermitianMatrix& b, double alpha,
                         double rank_tol) {
  const ExtendedOperator ext = pw_apply_extended(a, b, renyi(alpha), rank_tol);
  return ext.trace(trace_inf_tol(a, b));
}

HermitianMatrix weighted_mean(const HermitianMatrix& a, const HermitianMatrix& b, double alpha,
                              double rank_tol) {
  return pw_apply(a, b, weighted_geometric(alpha), rank_tol);
}

}  // namespace pwcalc
