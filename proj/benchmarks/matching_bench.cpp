#include <benchmark/benchmark.h>

#include "matchbound/matchbound.hpp"

namespace {

using namespace matchbound;

Graph random_graph(benchmark::State& state) {
  return generate(family::Random{static_cast<std::uint32_t>(state.range(0)),
                                 Probability{1, 4}, 17});
}

void BM_Stabilize_Random(benchmark::State& state) {
  const Graph g = random_graph(state);
  for (auto _ : state) benchmark::DoNotOptimize(stabilize(g));
  state.counters["m"] = static_cast<double>(g.edge_count());
}
BENCHMARK(BM_Stabilize_Random)->RangeMultiplier(2)->Range(16, 1024);

void BM_Exact_Random(benchmark::State& state) {
  const Graph g = random_graph(state);
  const OracleLimits limits{g.edge_count(), g.vertex_count()};
  for (auto _ : state) benchmark::DoNotOptimize(exact_max_matching(g, limits));
  state.counters["m"] = static_cast<double>(g.edge_count());
}
BENCHMARK(BM_Exact_Random)->DenseRange(8, 24, 4);

void BM_Stabilize_Triangles(benchmark::State& state) {
  const Graph g = generate(family::Triangles{static_cast<std::uint32_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(stabilize(g));
}
BENCHMARK(BM_Stabilize_Triangles)->RangeMultiplier(4)->Range(4, 4096);

void BM_Certify_Random(benchmark::State& state) {
  const Graph g = random_graph(state);
  const Matching m = stabilize(g);
  for (auto _ : state) benchmark::DoNotOptimize(certify(m));
}
BENCHMARK(BM_Certify_Random)->RangeMultiplier(4)->Range(16, 1024);

void BM_NaiveEnumerate(benchmark::State& state) {
  const Graph g = generate(family::Path{static_cast<std::uint32_t>(state.range(0) + 1)});
  for (auto _ : state) benchmark::DoNotOptimize(naive_enumerate_max(g));
}
BENCHMARK(BM_NaiveEnumerate)->DenseRange(8, 20, 4);

}  // namespace

BENCHMARK_MAIN();
