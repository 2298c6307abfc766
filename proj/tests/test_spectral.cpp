#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "pwcalc/spectral.hpp"
#include "support.hpp"

using namespace pwtest;

namespace {

Matrix diag(std::initializer_list<double> vals) {
  const Eigen::Index n = static_cast<Eigen::Index>(vals.size());
  Matrix m = Matrix::Zero(n, n);
  Eigen::Index i = 0;
  for (double v : vals) m(i, i) = v, ++i;
  return m;
}

}  // namespace

TEST_CASE("eig_hermitian separates and merges clusters") {
  Rng rng(101);
  const Matrix u = random_unitary(3, rng);
  const HermitianMatrix m(hermitize(u * diag({1.0, 1.0, 2.0}) * u.adjoint()));
  const auto sd = eig_hermitian(m);
  REQUIRE(sd.clusters().size() == 2);
  CHECK(std::abs(sd.clusters()[0].eigenvalue - 1.0) < 1e-12);
  CHECK(std::abs(sd.clusters()[0].projector.trace().real() - 2.0) < 1e-10);
  CHECK(std::abs(sd.clusters()[1].projector.trace().real() - 1.0) < 1e-10);
  sd.validate(m.mat());

  // A gap below the cluster tolerance merges.
  const HermitianMatrix near(diag({1.0, 1.0 + 1e-12, 3.0}));
  CHECK(eig_hermitian(near).clusters().size() == 2);
}

TEST_CASE("apply_scalar_function matches the spectrum") {
  const HermitianMatrix m(diag({4.0, 9.0}));
  const auto r = apply_scalar_function(m, [](double t) { return std::sqrt(t); });
  CHECK(rel_err(r.mat(), diag({2.0, 3.0})) < 1e-14);

  // Unitary covariance of the scalar calculus.
  Rng rng(102);
  const Matrix u = random_unitary(4, rng);
  const HermitianMatrix x = random_psd(4, 0.5, rng);
  const HermitianMatrix y(hermitize(u * x.mat() * u.adjoint()));
  const auto fx = apply_scalar_function(x, [](double t) { return std::log(t); });
  const auto fy = apply_scalar_function(y, [](double t) { return std::log(t); });
  CHECK(rel_err(fy.mat(), u * fx.mat() * u.adjoint()) < 1e-10);
}

TEST_CASE("apply_scalar_function rejects NaN and infinity") {
  const HermitianMatrix m(diag({0.0, 1.0}));
  CHECK_THROWS_AS(apply_scalar_function(m, [](double t) { return 1.0 / t; }), InfiniteValue);
  CHECK_THROWS_AS(apply_scalar_function(m, [](double t) { return std::sqrt(t - 0.5); }),
                  DomainError);
}

TEST_CASE("apply_scalar_function_extended splits finite and infinite clusters") {
  const HermitianMatrix m(diag({0.0, 2.0}));
  const auto ext = apply_scalar_function_extended(m, [](double t) {
    return t == 0.0 ? ExtendedReal::plus_infinity() : ExtendedReal::finite(1.0 / t);
  });
  CHECK(ext.has_infinite_part(1e-12));
  CHECK(std::abs(ext.infinite_part().mat()(0, 0).real() - 1.0) < 1e-14);
  CHECK(std::abs(ext.finite_part().mat()(1, 1).real() - 0.5) < 1e-14);
  CHECK(ext.trace(1e-12).is_infinite());
}

TEST_CASE("joint calculus reproduces the product on commuting pairs") {
  Rng rng(103);
  const auto [a, b] = random_commuting_pair(4, rng);
  const auto prod = joint_calculus_commuting(a, b, [](double x, double y) { return x * y; });
  CHECK(rel_err(prod.mat(), a.mat() * b.mat()) < 1e-10);

  const auto sum = joint_calculus_commuting(a, b, [](double x, double y) { return x + y; });
  CHECK(rel_err(sum.mat(), a.mat() + b.mat()) < 1e-10);
}

TEST_CASE("joint calculus gates on the commutator") {
  Rng rng(104);
  const HermitianMatrix a = random_psd(3, 0.1, rng);
  const HermitianMatrix b = random_psd(3, 0.1, rng);
  CHECK_THROWS_AS(joint_calculus_commuting(a, b, [](double x, double y) { return x * y; }),
                  NotCommuting);
}

TEST_CASE("pinv_power inverts on the range and vanishes on the kernel") {
  const HermitianMatrix m(diag({4.0, 0.0}));
  const auto inv = pinv_power(m, -1.0);
  CHECK(std::abs(inv.mat()(0, 0).real() - 0.25) < 1e-14);
  CHECK(std::abs(inv.mat()(1, 1).real()) < 1e-14);
  const auto half = pinv_power(m, 0.5);
  CHECK(std::abs(half.mat()(0, 0).real() - 2.0) < 1e-14);
  CHECK_THROWS_AS(pinv_power(HermitianMatrix(diag({-1.0, 1.0})), 0.5), NotPSD);
}

TEST_CASE("kernel_projector finds the numerical kernel") {
  Rng rng(105);
  const HermitianMatrix m = singular_psd(5, 2, rng);
  const Matrix k = kernel_projector(m);
  CHECK(std::abs(k.trace().real() - 2.0) < 1e-10);
  CHECK(spectral_norm(m.mat() * k) < 1e-10);

  const HermitianMatrix spd = random_psd(4, 0.2, rng);
  CHECK(spectral_norm(kernel_projector(spd)) < 1e-12);
}

TEST_CASE("similarity identity holds for self-adjoint conjugations") {
  Rng rng(106);
  const HermitianMatrix t = random_psd(4, 0.3, rng);
  // S = T^2 + I commutes with T, is positive, and keeps S^-1 T S self-adjoint.
  const Matrix s = t.mat() * t.mat() + Matrix::Identity(4, 4);
  const double defect = similarity_identity_check(s, t, [](double x) { return std::exp(x); });
  CHECK(defect < 1e-9);

  // A generic invertible S fails the self-adjointness gate.
  Matrix g = Matrix::Zero(4, 4);
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j) g(i, j) = rng.cnormal();
  g += 4.0 * Matrix::Identity(4, 4);
  CHECK_THROWS_AS(similarity_identity_check(g, t, [](double x) { return x * x; }),
                  NotSelfAdjointConjugate);
}

TEST_CASE("spectral decomposition validate catches tampering") {
  Rng rng(107);
  const HermitianMatrix m = random_psd(3, 0.2, rng);
  auto sd = eig_hermitian(m);
  std::vector<SpectralCluster> broken = sd.clusters();
  broken[0].projector *= 0.5;
  const SpectralDecomposition bad(std::move(broken), sd.cluster_tol(), 3);
  CHECK_THROWS_AS(bad.validate(m.mat()), PreconditionViolation);
}
