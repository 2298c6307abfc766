#include "pwcalc/random.hpp"

#include <cmath>

namespace pwcalc {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr double two_pi = 6.283185307179586476925286766559;

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t state = master ^ (0x9e3779b97f4a7c15ULL * (index + 1));
  splitmix64(state);
  return splitmix64(state);
}

double Rng::uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double a, double b) { return a + (b - a) * uniform01(); }

std::uint64_t Rng::integer(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  spare_ = radius * std::sin(two_pi * u2);
  has_spare_ = true;
  return radius * std::cos(two_pi * u2);
}

Complex Rng::cnormal() {
  const double re = normal();
  const double im = normal();
  return Complex(re * M_SQRT1_2, im * M_SQRT1_2);
}

namespace {

Matrix gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  Matrix g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = rng.cnormal();
  return g;
}

}  // namespace

HermitianMatrix random_psd(Eigen::Index d, double mu, Rng& rng) {
  const Matrix g = gaussian(d, d, rng) / std::sqrt(static_cast<double>(d));
  Matrix m = g.adjoint() * g;
  if (mu != 0.0) m += mu * Matrix::Identity(d, d);
  return HermitianMatrix(hermitize(m));
}

Matrix random_unitary(Eigen::Index d, Rng& rng) {
  const Matrix g = gaussian(d, d, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  // Fix the phase ambiguity of QR so the frame is a deterministic function of G.
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    if (std::abs(rjj) > 0.0) q.col(j) *= rjj / std::abs(rjj);
  }
  return q;
}

Matrix random_isometry(Eigen::Index d, Eigen::Index k, Rng& rng) {
  if (k < 1 || k > d) throw BadParameter("random_isometry: need 1 <= k <= d");
  return random_unitary(d, rng).leftCols(k);
}

HermitianMatrix random_hermitian_spectrum_in(Eigen::Index d, double a, double b, Rng& rng) {
  if (!(a < b)) throw BadParameter("random_hermitian_spectrum_in: need a < b");
  const Matrix u = random_unitary(d, rng);
  Eigen::VectorXd vals(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    double lam;
    do {
      lam = rng.uniform(a, b);
    } while (!(lam > a && lam < b));
    vals(i) = lam;
  }
  const Matrix m = u * vals.cast<Complex>().asDiagonal() * u.adjoint();
  return HermitianMatrix(hermitize(m));
}

std::pair<HermitianMatrix, HermitianMatrix> random_commuting_pair(Eigen::Index d, Rng& rng) {
  const Matrix u = random_unitary(d, rng);
  Eigen::VectorXd av(d), bv(d);
  for (Eigen::Index i = 0; i < d; ++i) av(i) = rng.uniform(0.0, 2.0);
  for (Eigen::Index i = 0; i < d; ++i) bv(i) = rng.uniform(0.0, 2.0);
  const Matrix a = u * av.cast<Complex>().asDiagonal() * u.adjoint();
  const Matrix b = u * bv.cast<Complex>().asDiagonal() * u.adjoint();
  return {HermitianMatrix(hermitize(a)), HermitianMatrix(hermitize(b))};
}

}  // namespace pwcalc
