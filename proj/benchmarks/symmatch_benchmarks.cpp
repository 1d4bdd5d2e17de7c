#include <benchmark/benchmark.h>

#include <numbers>

#include "random_instances.hpp"
#include "symmatch/amenability.hpp"
#include "symmatch/counterexample.hpp"
#include "symmatch/twinlattice.hpp"

namespace symmatch {
namespace {

void BM_HopcroftKarp(benchmark::State& state) {
  testing::Rng rng(1);
  const int n = static_cast<int>(state.range(0));
  const auto g = testing::random_bigraph(rng, n, n, 4.0 / n);
  for (auto _ : state) benchmark::DoNotOptimize(max_matching(g));
  state.SetComplexityN(n);
}
BENCHMARK(BM_HopcroftKarp)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_HallCheck(benchmark::State& state) {
  testing::Rng rng(2);
  const int n = static_cast<int>(state.range(0));
  const auto g = testing::random_bigraph(rng, n, n, 2.0 / n);
  for (auto _ : state) benchmark::DoNotOptimize(hall_check(g, Side::kLeft));
}
BENCHMARK(BM_HallCheck)->RangeMultiplier(4)->Range(64, 4096);

void BM_MaterializeCounterexample(benchmark::State& state) {
  const auto b = build_counterexample(standard_f2_paradox(), LatinSquare::cyclic(3));
  const auto window = ball(GroupDescriptor::free(2), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(materialize(b.sym_graph, window));
  state.counters["vertices"] = static_cast<double>(3 * 3 * window.size());
}
BENCHMARK(BM_MaterializeCounterexample)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_VerifyParadox(benchmark::State& state) {
  const auto p = standard_f2_paradox();
  for (auto _ : state) benchmark::DoNotOptimize(verify_paradox(p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VerifyParadox)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_TwinBottleneck(benchmark::State& state) {
  const auto rot = state.range(0) == 5 ? RationalRotation::make(3, 4, 5)
                                       : RationalRotation::make(5, 12, 13);
  for (auto _ : state) benchmark::DoNotOptimize(bottleneck_bound(rot, 1.9));
}
BENCHMARK(BM_TwinBottleneck)->Arg(5)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_IrrationalWindow(benchmark::State& state) {
  const int radius = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(irrational_window_estimate(std::numbers::pi / 4, {0.0, 0.0}, radius));
  }
}
BENCHMARK(BM_IrrationalWindow)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace symmatch

BENCHMARK_MAIN();
