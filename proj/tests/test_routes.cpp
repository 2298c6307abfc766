#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "pwcalc/fixtures.hpp"
#include "pwcalc/routes.hpp"
#include "pwcalc/spectral.hpp"
#include "support.hpp"

using namespace pwtest;

TEST_CASE("all routes agree on invertible pairs") {
  const auto fns = {weighted_geometric(0.5), weighted_geometric(0.25), parallel_sum_function(),
                    entropy_kernel(), renyi(0.5)};
  int i = 0;
  for (const auto& fn : fns) {
    for (int rep = 0; rep < 4; ++rep) {
      Rng rng(derive_seed(3001, static_cast<std::uint64_t>(i++)));
      const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.integer(4));
      const HermitianMatrix a = random_psd(d, 0.1, rng);
      const HermitianMatrix b = random_psd(d, 0.1, rng);
      const auto f0 = pw_apply(a, b, fn);
      const auto f1 = perspective_left(a, b, fn);
      const auto f2 = perspective_right(a, b, fn);
      const double scale = 1.0 + f0.norm2();
      CHECK(spectral_norm(f0.mat() - f1.mat()) <= 1e-8 * scale);
      CHECK(spectral_norm(f0.mat() - f2.mat()) <= 1e-8 * scale);
      CHECK(spectral_norm(f1.mat() - f2.mat()) <= 1e-8 * scale);
    }
  }
}

TEST_CASE("perspective routes demand an invertible pivot") {
  Rng rng(3002);
  const HermitianMatrix sing = singular_psd(3, 1, rng);
  const HermitianMatrix spd = random_psd(3, 0.2, rng);
  CHECK_THROWS_AS(perspective_left(sing, spd, weighted_geometric(0.5)), NotInvertible);
  CHECK_THROWS_AS(perspective_right(spd, sing, weighted_geometric(0.5)), NotInvertible);
  // The other operand may be singular when the section stays finite there.
  CHECK_NOTHROW(perspective_left(spd, sing, weighted_geometric(0.5)));
}

TEST_CASE("epsilon regularization approaches the calculus value from outside") {
  // Joint-kernel pairs are exactly the case the regularized route has to recover.
  Rng rng(3003);
  const auto [a, b] = shared_kernel_pair(5, 2, rng);
  for (const auto& fn : {weighted_geometric(0.5), parallel_sum_function(), renyi(0.5)}) {
    const auto study = limit_study(a, b, fn, default_eps_grid());
    REQUIRE(study.size() == 6);
    for (size_t i = 1; i < study.size(); ++i)
      CHECK(study[i].second <= study[i - 1].second * 1.01 + 1e-14);
    const double scale = 1.0 + pw_apply(a, b, fn).norm2();
    CHECK(study.back().second <= 1e-3 * scale);
  }
}

TEST_CASE("limit study rejects sections that blow up on the boundary") {
  Rng rng(3004);
  const HermitianMatrix a = random_psd(3, 0.2, rng);
  CHECK_THROWS_AS(limit_study(a, a, entropy_kernel(), default_eps_grid()),
                  FunctionNotContinuous);
  CHECK_THROWS_AS(limit_study(a, a, renyi(1.5), default_eps_grid()), FunctionNotContinuous);
}

TEST_CASE("epsilon arguments are validated") {
  Rng rng(3005);
  const HermitianMatrix a = random_psd(2, 0.2, rng);
  CHECK_THROWS_AS(epsilon_regularized(a, a, arithmetic_mean(), -1e-3, 0.0), BadParameter);
  CHECK_THROWS_AS(epsilon_regularized(a, a, arithmetic_mean(), 0.0, 0.0), BadParameter);
  CHECK_NOTHROW(epsilon_regularized(a, a, arithmetic_mean(), 1e-3, 0.0));
  CHECK_THROWS_AS(limit_study(a, a, arithmetic_mean(), {1e-2, 0.0}), BadParameter);
}

TEST_CASE("parallel sum closed form, dual form, and calculus value coincide") {
  for (int i = 0; i < 8; ++i) {
    Rng rng(derive_seed(3006, static_cast<std::uint64_t>(i)));
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.integer(4));
    const HermitianMatrix a = random_psd(d, 0.2, rng);
    const HermitianMatrix b = random_psd(d, 0.2, rng);
    const auto direct = parallel_sum_direct(a, b);
    const auto via_pw = pw_apply(a, b, parallel_sum_function());
    CHECK(rel_err(via_pw.mat(), direct.mat()) < 1e-9);
    // (A^{-1} + B^{-1})^{-1}, the resistor form.
    const Matrix dual = (pinv_power(a, -1.0).mat() + pinv_power(b, -1.0).mat());
    CHECK(rel_err(direct.mat(), pinv_power(hm(dual), -1.0).mat()) < 1e-8);
  }
}

TEST_CASE("parallel sum is the infimum over splits") {
  Rng rng(3007);
  const Eigen::Index d = 4;
  const HermitianMatrix a = random_psd(d, 0.2, rng);
  const HermitianMatrix b = random_psd(d, 0.2, rng);
  const auto ps = parallel_sum_direct(a, b);
  const Matrix sum_inv = pinv_power(HermitianMatrix(a.mat() + b.mat()), -1.0).mat();
  for (int i = 0; i < 50; ++i) {
    Vector x(d), y(d);
    for (Eigen::Index j = 0; j < d; ++j) x(j) = rng.cnormal(), y(j) = rng.cnormal();
    const Vector z = x - y;
    const double quad = (x.adjoint() * ps.mat() * x)(0).real();
    const double split = (y.adjoint() * a.mat() * y)(0).real() +
                         (z.adjoint() * b.mat() * z)(0).real();
    CHECK(quad <= split + 1e-9 * (1.0 + std::abs(split)));
    // The optimizer z* = (A+B)^{-1} A x attains it.
    const Vector zs = sum_inv * a.mat() * x;
    const Vector ys = x - zs;
    const double at_opt = (ys.adjoint() * a.mat() * ys)(0).real() +
                          (zs.adjoint() * b.mat() * zs)(0).real();
    CHECK(std::abs(quad - at_opt) <= 1e-9 * (1.0 + std::abs(quad)));
  }
}

TEST_CASE("symmetric functions are symmetric in the operands") {
  Rng rng(3008);
  const auto [a, b] = mixed_pair(0, 4, rng);
  for (const auto& fn : {weighted_geometric(0.5), parallel_sum_function(), arithmetic_mean()}) {
    CHECK(rel_err(pw_apply(a, b, fn).mat(), pw_apply(b, a, fn).mat()) < 1e-9);
  }
}

TEST_CASE("routes agree on the committed invertible fixtures") {
  const auto set = load_fixture_set(fixture_dir());
  const auto fn = weighted_geometric(0.5);
  int seen = 0;
  for (const auto& p : set) {
    if (p.category != "invertible") continue;
    ++seen;
    const auto f0 = pw_apply(p.a, p.b, fn);
    const auto f1 = perspective_left(p.a, p.b, fn);
    CHECK(spectral_norm(f0.mat() - f1.mat()) <= 1e-8 * (1.0 + f0.norm2()));
  }
  CHECK(seen == 12);
}
