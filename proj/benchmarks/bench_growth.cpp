#include <benchmark/benchmark.h>

#include <random>

#include "growth/basic_schedules.hpp"
#include "growth/composite_schedules.hpp"
#include "growth/kernels.hpp"
#include "growth/oracle.hpp"
#include "growth/zero_excess.hpp"

using namespace growth;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

Graph hypercube(int dim) {
  const int n = 1 << dim;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (!(v >> b & 1)) edges.emplace_back(v, v | 1 << b);
  return Graph::from_edges(n, edges);
}

void BM_MaxMatching(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 4.0 / n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(max_matching(g).size());
  state.SetComplexityN(n);
}
BENCHMARK(BM_MaxMatching)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_TwoSat(benchmark::State& state) {
  const int vars = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> var(0, vars - 1);
  TwoSatFormula f{vars, {}};
  for (int i = 0; i < 2 * vars; ++i)
    f.add_clause({var(rng), static_cast<bool>(rng() & 1)}, {var(rng), static_cast<bool>(rng() & 1)});
  for (auto _ : state) benchmark::DoNotOptimize(two_sat(f).has_value());
  state.SetComplexityN(vars);
}
BENCHMARK(BM_TwoSat)->RangeMultiplier(8)->Range(64, 1 << 18)->Complexity();

void BM_PathSchedule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(path_schedule(n).num_slots());
}
BENCHMARK(BM_PathSchedule)->RangeMultiplier(8)->Range(64, 1 << 18);

void BM_TreeSchedule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph t = random_tree(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(tree_schedule(t).num_slots());
  state.SetComplexityN(n);
}
BENCHMARK(BM_TreeSchedule)->RangeMultiplier(4)->Range(256, 1 << 16)->Complexity();

void BM_PlanarScheduleGrid(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const Graph g = grid_graph(side, side);
  for (auto _ : state) benchmark::DoNotOptimize(planar_schedule(g).num_slots());
}
BENCHMARK(BM_PlanarScheduleGrid)->RangeMultiplier(2)->Range(8, 128)->Unit(benchmark::kMillisecond);

void BM_ValidateTree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph t = random_tree(n, 4);
  const Schedule s = tree_schedule(t);
  for (auto _ : state) benchmark::DoNotOptimize(validate(s, t).slots);
}
BENCHMARK(BM_ValidateTree)->RangeMultiplier(4)->Range(256, 1 << 16);

void BM_EliminationSchedule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph t = random_tree(n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(elimination_schedule(t).has_value());
}
BENCHMARK(BM_EliminationSchedule)->RangeMultiplier(4)->Range(64, 4096);

void BM_FastGrowthHypercube(benchmark::State& state) {
  const Graph g = hypercube(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fast_growth(g).has_value());
}
BENCHMARK(BM_FastGrowthHypercube)->DenseRange(4, 10, 2);

void BM_OracleMinSlots(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_tree(n, 6);
  for (auto _ : state) benchmark::DoNotOptimize(min_slots_zero_excess(g, 2, n).has_value());
}
BENCHMARK(BM_OracleMinSlots)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
