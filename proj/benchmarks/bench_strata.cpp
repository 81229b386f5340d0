#include <benchmark/benchmark.h>

#include "frames/strata.hpp"
#include "frames/thresholds.hpp"

namespace {

using frames::Int;

void BM_MaximizeSigma(benchmark::State& state) {
  const Int n = state.range(0);
  const frames::FrameSpaceParams params(n + n / 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(frames::maximize_sigma(params));
}
BENCHMARK(BM_MaximizeSigma)->Arg(10)->Arg(1000)->Arg(1000000);

void BM_MaximizeSigmaExhaustive(benchmark::State& state) {
  const Int n = state.range(0);
  const frames::FrameSpaceParams params(n + n / 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(frames::maximize_sigma_exhaustive(params));
  state.SetComplexityN(n);
}
BENCHMARK(BM_MaximizeSigmaExhaustive)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_Thresholds(benchmark::State& state) {
  const Int n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(frames::thresholds(n));
}
BENCHMARK(BM_Thresholds)->Arg(10)->Arg(10000)->Arg(1000000);

void BM_ThresholdTable(benchmark::State& state) {
  for (auto _ : state) {
    Int acc = 0;
    for (Int n = 2; n <= 10000; ++n) acc += frames::d_ufd(n);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ThresholdTable)->Unit(benchmark::kMillisecond);

void BM_PosetAllPairs(benchmark::State& state) {
  const Int n = state.range(0);
  const frames::FrameSpaceParams params(2 * n - 2, n);
  const auto points = frames::enumerate_domain(params);
  for (auto _ : state) {
    int below = 0;
    for (auto a : points)
      for (auto b : points) below += frames::poset_compare(params, a, b).relation == frames::PosetRelation::Below;
    benchmark::DoNotOptimize(below);
  }
}
BENCHMARK(BM_PosetAllPairs)->Arg(6)->Arg(12)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
