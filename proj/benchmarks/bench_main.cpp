// bench_main.cpp — microbenchmarks for the hot paths: the kernel split, full
// calculus evaluations, the perspective route, and the entropy trace.
#include <benchmark/benchmark.h>

#include "pwcalc/quantities.hpp"
#include "pwcalc/random.hpp"
#include "pwcalc/routes.hpp"

namespace {

using namespace pwcalc;

std::pair<HermitianMatrix, HermitianMatrix> bench_pair(Eigen::Index d) {
  Rng rng(derive_seed(20260819ull, static_cast<std::uint64_t>(d)));
  return {random_psd(d, 0.1, rng), random_psd(d, 0.1, rng)};
}

void bm_decompose(benchmark::State& state) {
  const auto [a, b] = bench_pair(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(a, b));
}
BENCHMARK(bm_decompose)->Arg(4)->Arg(16)->Arg(64);

void bm_geometric_mean(benchmark::State& state) {
  const auto [a, b] = bench_pair(state.range(0));
  const HomogeneousFunction fn = weighted_geometric(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(pw_apply(a, b, fn));
}
BENCHMARK(bm_geometric_mean)->Arg(4)->Arg(16)->Arg(64);

void bm_parallel_sum(benchmark::State& state) {
  const auto [a, b] = bench_pair(state.range(0));
  const HomogeneousFunction fn = parallel_sum_function();
  for (auto _ : state) benchmark::DoNotOptimize(pw_apply(a, b, fn));
}
BENCHMARK(bm_parallel_sum)->Arg(4)->Arg(16)->Arg(64);

void bm_perspective_route(benchmark::State& state) {
  const auto [a, b] = bench_pair(state.range(0));
  const HomogeneousFunction fn = weighted_geometric(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(perspective_left(a, b, fn));
}
BENCHMARK(bm_perspective_route)->Arg(4)->Arg(16)->Arg(64);

void bm_bs_entropy(benchmark::State& state) {
  const auto [a, b] = bench_pair(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bs_relative_entropy(a, b));
}
BENCHMARK(bm_bs_entropy)->Arg(4)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
