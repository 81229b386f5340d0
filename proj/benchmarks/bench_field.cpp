#include <benchmark/benchmark.h>

#include "frames/field.hpp"
#include "frames/veronese.hpp"
#include "frames/witness.hpp"

namespace {

using frames::Int;

void BM_Rank(benchmark::State& state) {
  const frames::PrimeField f;
  frames::Rng rng(7);
  const auto size = static_cast<std::size_t>(state.range(0));
  const frames::Matrix m = frames::random_matrix(f, rng, size, size);
  for (auto _ : state) benchmark::DoNotOptimize(frames::rank(f, m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNCubed);

void BM_JacobianRank(benchmark::State& state) {
  const frames::PrimeField f;
  const Int n = state.range(0);
  const frames::Matrix a = frames::isotropic_block_witness(f, 2 * n, n);
  for (auto _ : state) benchmark::DoNotOptimize(frames::jacobian_rank(f, a));
}
BENCHMARK(BM_JacobianRank)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);

void BM_ConstructiveWitness(benchmark::State& state) {
  const frames::PrimeField f;
  const Int n = state.range(0);
  const frames::FrameSpaceParams params(n + 2, n);
  const frames::StratumIndex s{n - 2, 2};
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(frames::constructive_smooth_witness(f, params, s, seed++, 8));
}
BENCHMARK(BM_ConstructiveWitness)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_SquaresSpan(benchmark::State& state) {
  const frames::PrimeField f;
  frames::Rng rng(11);
  const auto r = static_cast<std::size_t>(state.range(0));
  const frames::Matrix forms = frames::random_matrix(f, rng, r * (r + 1) / 2, r);
  for (auto _ : state) benchmark::DoNotOptimize(frames::squares_span_dimension(f, forms));
}
BENCHMARK(BM_SquaresSpan)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

}  // namespace
