#include <benchmark/benchmark.h>

#include "histlab/construct.hpp"
#include "histlab/cyclic.hpp"
#include "histlab/profile.hpp"

using namespace histlab;

namespace {

void BM_CecCatalog(benchmark::State& state) {
  static const char* const names[] = {"petersen", "heawood", "dodecahedron", "desargues"};
  const Graph g = construct::catalog(names[state.range(0)]).graph;
  for (auto _ : state) benchmark::DoNotOptimize(cyclic::cyclic_edge_connectivity(g).value);
  state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_CecCatalog)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_CecInflation(benchmark::State& state) {
  const auto h = construct::BaseGraph::from(construct::catalog(state.range(0) == 0 ? "k4" : "petersen").graph);
  const Graph g = construct::inflate(h).inflated;
  for (auto _ : state) benchmark::DoNotOptimize(cyclic::cyclic_edge_connectivity(g).value);
  state.counters["n"] = g.vertex_count();
}
BENCHMARK(BM_CecInflation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CecCapped(benchmark::State& state) {
  const Graph g = construct::catalog("buckminster").graph;
  cyclic::CecOptions o;
  o.maxCycleLength = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cyclic::cyclic_edge_connectivity(g, o).value);
}
BENCHMARK(BM_CecCapped)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_VertexConnectivity(benchmark::State& state) {
  const Graph g = construct::random_regular(static_cast<int>(state.range(0)), 4, 11);
  for (auto _ : state) benchmark::DoNotOptimize(cyclic::vertex_connectivity(g));
}
BENCHMARK(BM_VertexConnectivity)->Arg(10)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
