#include <benchmark/benchmark.h>

#include "threeqb/threeqb.hpp"

using namespace threeqb;

namespace {

PureState fixed_haar_state(std::uint64_t i) {
  RngStream rng(RngStream::derive(1001, i));
  return sample_haar_state(rng);
}

void BM_ThreeTangle(benchmark::State& state) {
  const PureState psi = fixed_haar_state(0);
  for (auto _ : state) benchmark::DoNotOptimize(three_tangle(psi));
}
BENCHMARK(BM_ThreeTangle);

void BM_OmegaMeasure(benchmark::State& state) {
  const PureState psi = fixed_haar_state(1);
  for (auto _ : state) benchmark::DoNotOptimize(omega_measure(psi));
}
BENCHMARK(BM_OmegaMeasure);

void BM_ConcurrenceSplit(benchmark::State& state) {
  const PureState psi = fixed_haar_state(2);
  for (auto _ : state) benchmark::DoNotOptimize(concurrence_split(psi, 1));
}
BENCHMARK(BM_ConcurrenceSplit);

void BM_LuInvariants(benchmark::State& state) {
  const PureState psi = fixed_haar_state(3);
  for (auto _ : state) benchmark::DoNotOptimize(lu_invariants(psi));
}
BENCHMARK(BM_LuInvariants);

void BM_WoottersConcurrence(benchmark::State& state) {
  const SmallMatrix rho = reduced_density(fixed_haar_state(4), {1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(wootters_concurrence_mixed(rho));
}
BENCHMARK(BM_WoottersConcurrence);

void BM_Classify(benchmark::State& state) {
  const PureState psi = fixed_haar_state(5);
  for (auto _ : state) benchmark::DoNotOptimize(classify(psi));
}
BENCHMARK(BM_Classify);

void BM_MonotonicityTrial(benchmark::State& state) {
  std::uint64_t i = 0;
  const MeasureFn f = measure_function(MeasureTag::Omega);
  for (auto _ : state) {
    RngStream rng(RngStream::derive(7, i++));
    const PureState psi = sample_haar_state(rng);
    const TwoOutcomeProtocol pr = sample_protocol(rng);
    benchmark::DoNotOptimize(monotonicity_margin(f, psi, pr));
  }
}
BENCHMARK(BM_MonotonicityTrial);

}  // namespace

BENCHMARK_MAIN();
