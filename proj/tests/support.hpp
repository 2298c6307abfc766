// support.hpp — shared helpers for the pwcalc test binaries.
#pragma once

#include <string>
#include <utility>

#include "pwcalc/hermitian.hpp"
#include "pwcalc/random.hpp"

namespace pwtest {

using namespace pwcalc;

inline std::string fixture_dir() { return PWCALC_FIXTURE_DIR; }
inline std::string source_dir() { return PWCALC_SOURCE_DIR; }

// Deviation relative to the reference scale; the form every tolerance in the
// library uses.
inline double rel_err(const Matrix& got, const Matrix& want) {
  return spectral_norm(got - want) / (1.0 + spectral_norm(want));
}

inline HermitianMatrix hm(const Matrix& m) { return HermitianMatrix(hermitize(m)); }

// One PSD with a kernel of exact rank k, spectrum in [0.2, 2) elsewhere.
inline HermitianMatrix singular_psd(Eigen::Index d, Eigen::Index k, Rng& rng) {
  const Matrix u = random_unitary(d, rng);
  Eigen::VectorXd s = Eigen::VectorXd::Zero(d);
  for (Eigen::Index i = k; i < d; ++i) s(i) = rng.uniform(0.2, 2.0);
  return hm(u * s.cast<Complex>().asDiagonal() * u.adjoint());
}

// Pair with a shared null space of rank k, strictly positive on the complement.
inline std::pair<HermitianMatrix, HermitianMatrix> shared_kernel_pair(Eigen::Index d,
                                                                      Eigen::Index k,
                                                                      Rng& rng) {
  const Matrix q = random_isometry(d, d - k, rng);
  return {hm(q * random_psd(d - k, 0.2, rng).mat() * q.adjoint()),
          hm(q * random_psd(d - k, 0.2, rng).mat() * q.adjoint())};
}

// Cycles the structural cases the calculus has to survive: both invertible, one
// singular operand, and a joint kernel.
inline std::pair<HermitianMatrix, HermitianMatrix> mixed_pair(int kind, Eigen::Index d,
                                                              Rng& rng) {
  switch (kind % 3) {
    case 0:
      return {random_psd(d, 0.1, rng), random_psd(d, 0.1, rng)};
    case 1:
      return {singular_psd(d, 1, rng), random_psd(d, 0.1, rng)};
    default:
      return shared_kernel_pair(d, 1, rng);
  }
}

}  // namespace pwtest
