#include <benchmark/benchmark.h>

#include "histlab/construct.hpp"
#include "histlab/hist.hpp"
#include "histlab/profile.hpp"
#include "histlab/topology.hpp"

using namespace histlab;

namespace {

const char* const kNames[] = {"petersen", "heawood", "pappus", "dodecahedron", "desargues"};

void BM_SolveCatalogCount(benchmark::State& state) {
  const Graph g = construct::catalog(kNames[state.range(0)]).graph;
  hist::SolveOptions o;
  o.mode = hist::SolveMode::Count;
  o.useMod4Filter = false;
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const auto r = hist::solve(g, o);
    nodes = r.nodesExplored;
    benchmark::DoNotOptimize(r.count);
  }
  state.SetLabel(kNames[state.range(0)]);
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_SolveCatalogCount)->DenseRange(0, 4);

void BM_SolveRandomCubicDecide(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Graph> graphs;
  for (std::uint64_t seed = 0; graphs.size() < 8; ++seed) {
    auto g = construct::random_regular(n, 3, seed);
    if (is_connected(g)) graphs.push_back(std::move(g));
  }
  for (auto _ : state) {
    for (const auto& g : graphs) benchmark::DoNotOptimize(hist::solve(g).verdict);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}
BENCHMARK(BM_SolveRandomCubicDecide)->Arg(20)->Arg(30)->Arg(40)->Arg(50);

void BM_SolveWorkers(benchmark::State& state) {
  const Graph g = construct::honeycomb_torus(3, 5).graph;
  hist::SolveOptions o;
  o.mode = hist::SolveMode::Count;
  o.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hist::solve(g, o).count);
}
BENCHMARK(BM_SolveWorkers)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

void BM_PlanarBuckminster(benchmark::State& state) {
  const auto b = construct::catalog("buckminster");
  for (auto _ : state) benchmark::DoNotOptimize(topology::planar_hist_solve(b.graph, *b.rotation).verdict);
}
BENCHMARK(BM_PlanarBuckminster);

void BM_Oracle(benchmark::State& state) {
  const Graph g = construct::catalog(kNames[state.range(0)]).graph;
  for (auto _ : state) benchmark::DoNotOptimize(hist::oracle_enumerate(g).size());
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_Oracle)->DenseRange(0, 2);

}  // namespace

BENCHMARK_MAIN();
