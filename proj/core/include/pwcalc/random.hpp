// random.hpp — Seeded, reproducible random instances. The engine is std::mt19937_64
// (bit-pinned by the standard); uniform and normal variates are derived in-repo because
// std:: distributions are implementation-defined and frozen fixtures must not drift.
#pragma once

#include <cstdint>
#include <random>

#include "pwcalc/hermitian.hpp"

namespace pwcalc {

// Derives an independent per-trial seed from (master, index); trials seeded this way
// are reproducible regardless of evaluation order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform01();                      // [0, 1)
  double uniform(double a, double b);      // [a, b)
  std::uint64_t integer(std::uint64_t n);  // {0, ..., n-1}
  double normal();                         // standard normal, Box-Muller
  Complex cnormal();                       // standard complex normal, E|z|^2 = 1

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// d x d Hermitian PSD: G*G with G complex Gaussian (entries ~ CN(0, 1/d)), plus mu·I.
HermitianMatrix random_psd(Eigen::Index d, double mu, Rng& rng);

// Haar-style random unitary: QR of a complex Gaussian square matrix.
Matrix random_unitary(Eigen::Index d, Rng& rng);

// d x k isometry (k <= d): the first k columns of a random unitary frame.
Matrix random_isometry(Eigen::Index d, Eigen::Index k, Rng& rng);

// Random Hermitian with eigenvalues sampled strictly inside (a, b).
HermitianMatrix random_hermitian_spectrum_in(Eigen::Index d, double a, double b, Rng& rng);

// Commuting PSD pair: a shared random eigenbasis with independent nonnegative spectra.
std::pair<HermitianMatrix, HermitianMatrix> random_commuting_pair(Eigen::Index d, Rng& rng);

}  // namespace pwcalc
