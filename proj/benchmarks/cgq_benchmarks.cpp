#include <benchmark/benchmark.h>

#include "cgq/hankel.hpp"
#include "cgq/ladder.hpp"
#include "cgq/moments.hpp"
#include "cgq/mp_matrix.hpp"

namespace {

using namespace cgq;

void BM_DetLuHankel(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const Precision p{default_b1(k)};
  const auto mu = moment_sequence(WeightSpec::scaled_chi(2), static_cast<unsigned>(2 * k - 2), p);
  WorkingPrecision scope(p);
  MpMatrix h(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) h(i, j) = mu.values[i + j];
  }
  for (auto _ : state) benchmark::DoNotOptimize(det_lu(h));
}
BENCHMARK(BM_DetLuHankel)->Arg(5)->Arg(17)->Arg(33);

void BM_RecursionCoeffs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Precision p{default_b1(n)};
  const auto mu = moment_sequence(WeightSpec::scaled_chi(160), static_cast<unsigned>(2 * n - 1), p);
  for (auto _ : state) benchmark::DoNotOptimize(recursion_coeffs(mu, n));
}
BENCHMARK(BM_RecursionCoeffs)->Arg(5)->Arg(17)->Arg(33)->Unit(benchmark::kMillisecond);

void BM_ComputeRule(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const WeightSpec spec = WeightSpec::scaled_chi(2);
  const Precision p{default_b1(n)};
  for (auto _ : state) benchmark::DoNotOptimize(compute_rule(spec, n, p));
}
BENCHMARK(BM_ComputeRule)->Arg(5)->Arg(17)->Arg(33)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
