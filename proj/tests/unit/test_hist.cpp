#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "helpers.hpp"
#include "histlab/construct.hpp"
#include "histlab/hist.hpp"
#include "oracles.hpp"

using namespace histlab;
using hist::HistErrorKind;
using hist::SolveMode;
using hist::Verdict;

namespace {

Graph named(const char* name) { return construct::catalog(name).graph; }

EdgeSet edges_of(const Graph& g, std::vector<Edge> pairs) { return EdgeSet::from_pairs(g, pairs); }

HistErrorKind verify_error(const Graph& g, const EdgeSet& t) {
  try {
    hist::verify_hist(g, t);
  } catch (const hist::HistError& e) {
    return e.kind();
  }
  FAIL("certificate accepted");
  return HistErrorKind::InvalidCertificate;
}

std::vector<std::vector<int>> tree_sets(const std::vector<hist::HistCertificate>& certs) {
  std::vector<std::vector<int>> out;
  for (const auto& c : certs) out.push_back(c.treeEdges.indices());
  std::sort(out.begin(), out.end());
  return out;
}

hist::SolveReport run(const Graph& g, SolveMode mode, bool mod4 = true, unsigned workers = 1) {
  hist::SolveOptions o;
  o.mode = mode;
  o.useMod4Filter = mod4;
  o.workers = workers;
  return hist::solve(g, o);
}

}  // namespace

TEST_CASE("spanning tree oracle sanity") {
  CHECK(oracle::spanning_trees(named("k4")).size() == 16);
  CHECK(oracle::spanning_trees(named("k33")).size() == 81);
  CHECK(oracle::hists(named("k4")).size() == 4);
  CHECK(oracle::hists(named("k33")).size() == 9);
}

TEST_CASE("verify_hist") {
  const Graph g = named("k4");
  const auto star = hist::verify_hist(g, edges_of(g, {{0, 1}, {0, 2}, {0, 3}}));
  CHECK(star.leafCount == 3);
  CHECK(star.branchCount == 1);

  CHECK(verify_error(g, edges_of(g, {{0, 1}, {1, 2}, {2, 3}})) == HistErrorKind::DegreeTwoVertex);
  CHECK(verify_error(g, edges_of(g, {{0, 1}, {1, 2}})) == HistErrorKind::NotSpanning);
  CHECK(verify_error(g, edges_of(g, {{0, 1}, {1, 2}, {0, 2}, {0, 3}})) == HistErrorKind::ContainsCycle);
  CHECK(verify_error(Graph(4, {{0, 1}, {2, 3}}), EdgeSet(2, 4)) == HistErrorKind::NotCubic);
  CHECK(verify_error(g, EdgeSet(5, 4)) == HistErrorKind::HostMismatch);

  try {
    hist::verify_hist(g, edges_of(g, {{0, 1}, {1, 2}, {2, 3}}));
  } catch (const hist::HistError& e) {
    CHECK(e.vertex() == 1);
  }
}

TEST_CASE("dodecahedron spanning trees all have a degree-two vertex") {
  const Graph g = named("dodecahedron");
  const auto r = run(g, SolveMode::Count, false);
  CHECK(r.verdict == Verdict::NoHist);
  CHECK(r.count == 0U);
  // A BFS spanning tree is one concrete tree; it must be rejected.
  EdgeSet t(g);
  std::vector<char> seen(20, 0);
  std::vector<Vertex> queue{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int e : g.incident_edges(queue[i])) {
      const Vertex w = g.other(e, queue[i]);
      if (!seen[w]) {
        seen[w] = 1;
        t.insert(e);
        queue.push_back(w);
      }
    }
  }
  CHECK(verify_error(g, t) == HistErrorKind::DegreeTwoVertex);
}

TEST_CASE("complement_of_hist and hist_from_two_regular") {
  const Graph g = named("k4");
  const auto star = hist::verify_hist(g, edges_of(g, {{0, 1}, {0, 2}, {0, 3}}));
  const auto h = hist::complement_of_hist(g, star);
  CHECK(h.cycles == std::vector<std::vector<Vertex>>{{1, 2, 3}});
  CHECK(h.vertex_count() == 3);
  CHECK(hist::hist_from_two_regular(g, h) == star);

  hist::HistCertificate bogus{edges_of(g, {{0, 1}, {1, 2}, {2, 3}}), 2, 2};
  CHECK_THROWS_AS(hist::complement_of_hist(g, bogus), hist::HistError);

  const Graph k33 = named("k33");
  // Centres 2 and 5 (classes {0,1,2} / {3,4,5}); the leaves form the 4-cycle 0-3-1-4.
  const auto dbl = hist::verify_hist(k33, edges_of(k33, {{2, 3}, {2, 4}, {2, 5}, {0, 5}, {1, 5}}));
  const auto c4 = hist::complement_of_hist(k33, dbl);
  CHECK(c4.cycles == std::vector<std::vector<Vertex>>{{0, 3, 1, 4}});
  CHECK(hist::hist_from_two_regular(k33, c4) == dbl);

  const Graph pet = named("petersen");
  const auto outer = hist::TwoRegularSubgraph::from_cycles(pet, {{0, 1, 2, 3, 4}});
  try {
    hist::hist_from_two_regular(pet, outer);
    FAIL("accepted a 5-vertex complement");
  } catch (const hist::HistError& e) {
    CHECK(e.kind() == HistErrorKind::WrongVertexCount);
  }
}

TEST_CASE("hist_from_two_regular rejects separating subgraphs") {
  // A single cycle on n/2 + 1 vertices whose removal disconnects the graph.
  bool found = false;
  for (const auto& name : construct::cubic_catalog_names()) {
    const Graph g = named(name.c_str());
    const auto target = static_cast<std::size_t>(g.vertex_count() / 2 + 1);
    for (const auto& c : oracle::simple_cycles(g, static_cast<int>(target))) {
      if (c.size() != target) continue;
      std::vector<char> removed(static_cast<std::size_t>(g.edge_count()), 0);
      for (std::size_t i = 0; i < c.size(); ++i) removed[*g.edge_index(c[i], c[(i + 1) % c.size()])] = 1;
      const auto label = oracle::components(g, {}, removed);
      if (*std::max_element(label.begin(), label.end()) == 0) continue;
      const auto h = hist::TwoRegularSubgraph::from_cycles(g, {c});
      try {
        hist::hist_from_two_regular(g, h);
        FAIL("separating subgraph accepted");
      } catch (const hist::HistError& e) {
        CHECK(e.kind() == HistErrorKind::NotNonSeparating);
      }
      found = true;
      break;
    }
    if (found) break;
  }
  CHECK(found);
}

TEST_CASE("two-regular subgraph decomposition") {
  const Graph g = named("k4");
  const auto tri = hist::TwoRegularSubgraph::from_edges(g, edges_of(g, {{1, 2}, {2, 3}, {1, 3}}));
  CHECK(tri.cycles == std::vector<std::vector<Vertex>>{{1, 2, 3}});
  CHECK(tri.coveredVertices == std::vector<Vertex>{1, 2, 3});
  CHECK_THROWS_AS(hist::TwoRegularSubgraph::from_edges(g, edges_of(g, {{0, 1}, {1, 2}})), hist::HistError);
  CHECK_THROWS_AS(hist::TwoRegularSubgraph::from_cycles(g, {{0, 1, 2}, {0, 2, 3}}), hist::HistError);
}

TEST_CASE("mod4 filter") {
  CHECK(hist::mod4_filter(named("cube")) == hist::FilterVerdict::NoHist);
  CHECK(hist::mod4_filter(named("k33")) == hist::FilterVerdict::Inconclusive);
  CHECK(hist::mod4_filter(named("petersen")) == hist::FilterVerdict::Inconclusive);
  CHECK_THROWS_AS(hist::mod4_filter(Graph(3, {{0, 1}, {1, 2}})), hist::HistError);
}

TEST_CASE("solve counts") {
  const auto k4 = run(named("k4"), SolveMode::Count);
  CHECK(k4.verdict == Verdict::HasHist);
  CHECK(k4.count == 4U);
  const auto k33 = run(named("k33"), SolveMode::Count);
  CHECK(k33.count == 9U);
  CHECK(tree_sets(run(named("k33"), SolveMode::EnumerateAll).certificates) == oracle::hists(named("k33")));

  const auto dodeca = run(named("dodecahedron"), SolveMode::Decide);
  CHECK(dodeca.verdict == Verdict::NoHist);
  CHECK(dodeca.certificates.empty());
}

TEST_CASE("solve errors and filter reporting") {
  CHECK_THROWS_AS(hist::solve(Graph(3, {{0, 1}, {1, 2}})), hist::HistError);
  Graph twoK4(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
  try {
    hist::solve(twoK4);
    FAIL("disconnected input accepted");
  } catch (const hist::HistError& e) {
    CHECK(e.kind() == HistErrorKind::Disconnected);
  }
  const auto cube = run(named("cube"), SolveMode::Decide);
  CHECK(cube.verdict == Verdict::NoHist);
  CHECK(cube.filterUsed == hist::FilterUsed::Mod4);
  CHECK(cube.nodesExplored == 0U);
  const auto raw = run(named("cube"), SolveMode::Decide, false);
  CHECK(raw.verdict == Verdict::NoHist);
  CHECK(raw.filterUsed == hist::FilterUsed::None);
}

TEST_CASE("budget exhaustion is its own verdict") {
  hist::SolveOptions o;
  o.mode = SolveMode::Count;
  o.nodeBudget = 3;
  o.useMod4Filter = false;
  const auto r = hist::solve(named("desargues"), o);
  CHECK(r.verdict == Verdict::BudgetExceeded);
  CHECK_FALSE(r.count.has_value());
  CHECK(r.certificates.empty());
}

TEST_CASE("certificates are sound and sorted") {
  for (const auto& name : construct::cubic_catalog_names()) {
    const Graph g = named(name.c_str());
    const auto r = run(g, SolveMode::EnumerateAll);
    CHECK(std::is_sorted(r.certificates.begin(), r.certificates.end()));
    CHECK(r.count == r.certificates.size());
    for (const auto& c : r.certificates) {
      const auto v = hist::verify_hist(g, c.treeEdges);
      CHECK(v == c);
      CHECK(c.leafCount == c.branchCount + 2);
      CHECK(c.leafCount == g.vertex_count() / 2 + 1);
      const auto h = hist::complement_of_hist(g, c);
      CHECK(h.edgeSet == c.treeEdges.complement());
      CHECK(hist::hist_from_two_regular(g, h) == c);
    }
  }
}

TEST_CASE("solver agrees with the spanning-tree oracle on small graphs") {
  for (const auto& g : testing::random_cubic_corpus(40)) {
    if (g.vertex_count() > 12) continue;
    CHECK(tree_sets(run(g, SolveMode::EnumerateAll).certificates) == oracle::hists(g));
  }
  for (const char* name : {"k4", "k33", "petersen", "prism(3)", "prism(5)"}) {
    CHECK(tree_sets(run(named(name), SolveMode::EnumerateAll).certificates) == oracle::hists(named(name)));
  }
}

TEST_CASE("solver agrees with oracle_enumerate") {
  for (const auto& g : testing::random_cubic_corpus(50)) {
    CHECK(run(g, SolveMode::EnumerateAll).certificates == hist::oracle_enumerate(g));
  }
  CHECK(hist::oracle_enumerate(named("cube")).empty());
  CHECK(hist::oracle_enumerate(named("k4")).size() == 4);
  CHECK(hist::oracle_enumerate(named("k33")).size() == 9);
  try {
    hist::oracle_enumerate(named("dodecahedron"), 16);
    FAIL("cap ignored");
  } catch (const hist::HistError& e) {
    CHECK(e.kind() == HistErrorKind::InstanceTooLarge);
  }
}

TEST_CASE("modes are consistent") {
  for (const auto& g : testing::random_cubic_corpus(30)) {
    const auto all = run(g, SolveMode::EnumerateAll);
    const auto count = run(g, SolveMode::Count);
    const auto first = run(g, SolveMode::First);
    const auto decide = run(g, SolveMode::Decide);
    CHECK(count.count == all.count);
    CHECK(count.certificates.empty());
    CHECK(first.verdict == all.verdict);
    CHECK(decide.verdict == all.verdict);
    CHECK(first.certificates.size() == (all.certificates.empty() ? 0U : 1U));
    if (!first.certificates.empty()) hist::verify_hist(g, first.certificates.front().treeEdges);
  }
}

TEST_CASE("reports do not depend on the worker count") {
  for (const char* name : {"petersen", "heawood", "pappus", "desargues"}) {
    const Graph g = named(name);
    const auto one = run(g, SolveMode::EnumerateAll, true, 1);
    for (unsigned w : {2U, 4U, 7U}) {
      const auto many = run(g, SolveMode::EnumerateAll, true, w);
      CHECK(many.certificates == one.certificates);
      CHECK(many.count == one.count);
      CHECK(many.nodesExplored == one.nodesExplored);
    }
  }
}

TEST_CASE("certificate file round trip") {
  const Graph g = named("petersen");
  const auto r = run(g, SolveMode::First);
  REQUIRE(r.verdict == Verdict::HasHist);
  std::stringstream io;
  hist::write_certificate(io, g, r.certificates.front());
  CHECK(io.str().rfind("hist 10\n", 0) == 0);
  const EdgeSet back = hist::read_certificate(io, g);
  CHECK(back == r.certificates.front().treeEdges);

  std::istringstream bad("hist 10\n0 1\n");
  CHECK_THROWS(hist::read_certificate(bad, g));
}

TEST_CASE("regression: Petersen graph") {
  // Frozen after agreement with both oracles; not a literature value.
  const Graph g = named("petersen");
  REQUIRE(oracle::hists(g).size() == 10);
  const auto r = run(g, SolveMode::Count);
  CHECK(r.verdict == Verdict::HasHist);
  CHECK(r.count == 10U);
}

TEST_CASE("regression: catalog counts") {
  struct Expect {
    const char* name;
    std::uint64_t count;
  };
  for (auto e : {Expect{"heawood", 21}, Expect{"pappus", 0}, Expect{"prism(5)", 0}, Expect{"prism(3)", 3}}) {
    CAPTURE(e.name);
    const Graph g = named(e.name);
    REQUIRE(hist::oracle_enumerate(g).size() == e.count);
    CHECK(run(g, SolveMode::Count, false).count == e.count);
  }
}
