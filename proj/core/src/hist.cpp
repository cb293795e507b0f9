#include "histlab/hist.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "histlab/profile.hpp"
#include "histlab/union_find.hpp"

namespace histlab::hist {

std::string_view to_string(HistErrorKind kind) noexcept {
  switch (kind) {
    case HistErrorKind::NotCubic: return "NotCubic";
    case HistErrorKind::Disconnected: return "Disconnected";
    case HistErrorKind::HostMismatch: return "HostMismatch";
    case HistErrorKind::NotSpanning: return "NotSpanning";
    case HistErrorKind::ContainsCycle: return "ContainsCycle";
    case HistErrorKind::DegreeTwoVertex: return "DegreeTwoVertex";
    case HistErrorKind::InvalidCertificate: return "InvalidCertificate";
    case HistErrorKind::NotTwoRegular: return "NotTwoRegular";
    case HistErrorKind::WrongVertexCount: return "WrongVertexCount";
    case HistErrorKind::NotNonSeparating: return "NotNonSeparating";
    case HistErrorKind::InstanceTooLarge: return "InstanceTooLarge";
  }
  return "Unknown";
}

std::string_view to_string(FilterVerdict v) noexcept {
  return v == FilterVerdict::NoHist ? "NoHist" : "Inconclusive";
}

std::string_view to_string(SolveMode m) noexcept {
  switch (m) {
    case SolveMode::Decide: return "decide";
    case SolveMode::First: return "first";
    case SolveMode::Count: return "count";
    case SolveMode::EnumerateAll: return "all";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::HasHist: return "HasHist";
    case Verdict::NoHist: return "NoHist";
    case Verdict::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

std::string_view to_string(FilterUsed f) noexcept {
  switch (f) {
    case FilterUsed::None: return "None";
    case FilterUsed::Mod4: return "Mod4";
    case FilterUsed::Facial: return "Facial";
  }
  return "Unknown";
}

namespace {

void require_connected_cubic(const Graph& g) {
  if (!is_cubic(g)) throw HistError(HistErrorKind::NotCubic, "graph is not cubic");
  if (!is_connected(g)) throw HistError(HistErrorKind::Disconnected, "graph is not connected");
}

void require_host(const Graph& g, const EdgeSet& s) {
  if (!s.compatible_with(g)) {
    throw HistError(HistErrorKind::HostMismatch, "edge set belongs to a different graph");
  }
}

}  // namespace

// ---------------------------------------------------------------------------

TwoRegularSubgraph TwoRegularSubgraph::from_edges(const Graph& g, const EdgeSet& edges) {
  require_host(g, edges);
  const int n = g.vertex_count();
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (int e : edges.indices()) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] != 0 && deg[v] != 2) {
      throw HistError(HistErrorKind::NotTwoRegular,
                      "vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]) +
                          " in the subgraph",
                      v);
    }
  }

  TwoRegularSubgraph h;
  h.edgeSet = edges;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex s = 0; s < n; ++s) {
    if (deg[s] == 0) continue;
    h.coveredVertices.push_back(s);
    if (seen[s]) continue;

    std::vector<Vertex> cycle{s};
    seen[s] = 1;
    Vertex prev = -1;
    Vertex cur = s;
    while (true) {
      Vertex next = -1;
      auto nb = g.neighbors(cur);
      auto inc = g.incident_edges(cur);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (edges.contains(inc[i]) && nb[i] != prev) {
          next = nb[i];
          break;  // neighbours ascend, so at s this is the smaller one
        }
      }
      if (next == s) break;
      seen[next] = 1;
      cycle.push_back(next);
      prev = cur;
      cur = next;
    }
    h.cycles.push_back(std::move(cycle));
  }
  return h;
}

TwoRegularSubgraph TwoRegularSubgraph::from_cycles(const Graph& g,
                                                   const std::vector<std::vector<Vertex>>& cycles) {
  EdgeSet edges(g);
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& c : cycles) {
    if (c.size() < 3) throw HistError(HistErrorKind::NotTwoRegular, "cycle shorter than 3");
    for (std::size_t i = 0; i < c.size(); ++i) {
      Vertex v = c[i];
      if (v < 0 || v >= g.vertex_count() || used[v]) {
        throw HistError(HistErrorKind::NotTwoRegular,
                        "vertex " + std::to_string(v) + " repeated or out of range", v);
      }
      used[v] = 1;
      auto e = g.edge_index(v, c[(i + 1) % c.size()]);
      if (!e) {
        throw HistError(HistErrorKind::NotTwoRegular,
                        "consecutive cycle vertices " + std::to_string(v) + "," +
                            std::to_string(c[(i + 1) % c.size()]) + " are not adjacent",
                        v);
      }
      edges.insert(*e);
    }
  }
  return from_edges(g, edges);
}

// ---------------------------------------------------------------------------

HistCertificate verify_hist(const Graph& g, const EdgeSet& t) {
  require_connected_cubic(g);
  require_host(g, t);
  const int n = g.vertex_count();

  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  const auto chosen = t.indices();
  for (int e : chosen) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == 0) {
      throw HistError(HistErrorKind::NotSpanning,
                      "vertex " + std::to_string(v) + " is not covered by the tree", v);
    }
  }
  UnionFind forest(n);
  for (int e : chosen) {
    if (!forest.unite(g.edge(e).u, g.edge(e).v)) {
      throw HistError(HistErrorKind::ContainsCycle,
                      "tree edges contain a cycle through edge " + std::to_string(e));
    }
  }
  if (forest.set_count() != 1) {
    throw HistError(HistErrorKind::Disconnected,
                    "tree edges form " + std::to_string(forest.set_count()) + " components");
  }
  HistCertificate cert{t, 0, 0};
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == 2) {
      throw HistError(HistErrorKind::DegreeTwoVertex,
                      "vertex " + std::to_string(v) + " has tree degree 2", v);
    }
    (deg[v] == 1 ? cert.leafCount : cert.branchCount) += 1;
  }
  return cert;
}

TwoRegularSubgraph complement_of_hist(const Graph& g, const HistCertificate& cert) {
  HistCertificate checked;
  try {
    checked = verify_hist(g, cert.treeEdges);
  } catch (const HistError& err) {
    if (err.kind() == HistErrorKind::NotCubic || err.kind() == HistErrorKind::HostMismatch) throw;
    throw HistError(HistErrorKind::InvalidCertificate,
                    std::string("certificate is not a Hist: ") + err.what());
  }
  if (checked.leafCount != cert.leafCount || checked.branchCount != cert.branchCount) {
    throw HistError(HistErrorKind::InvalidCertificate,
                    "certificate leaf/branch counts do not match its tree");
  }
  return TwoRegularSubgraph::from_edges(g, cert.treeEdges.complement());
}

HistCertificate hist_from_two_regular(const Graph& g, const TwoRegularSubgraph& h) {
  require_connected_cubic(g);
  require_host(g, h.edgeSet);
  auto canonical = TwoRegularSubgraph::from_edges(g, h.edgeSet);
  if (canonical.coveredVertices != h.coveredVertices) {
    throw HistError(HistErrorKind::NotTwoRegular, "covered vertices disagree with the edge set");
  }
  const int n = g.vertex_count();
  if (h.vertex_count() != n / 2 + 1) {
    throw HistError(HistErrorKind::WrongVertexCount,
                    "subgraph covers " + std::to_string(h.vertex_count()) + " vertices, need " +
                        std::to_string(n / 2 + 1));
  }
  const auto tree = h.edgeSet.complement();
  UnionFind uf(n);
  for (int e : tree.indices()) uf.unite(g.edge(e).u, g.edge(e).v);
  if (uf.set_count() != 1) {
    throw HistError(HistErrorKind::NotNonSeparating, "removing the subgraph disconnects the graph");
  }
  return verify_hist(g, tree);
}

FilterVerdict mod4_filter(const Graph& g) {
  if (!is_cubic(g)) throw HistError(HistErrorKind::NotCubic, "graph is not cubic");
  if (bipartition(g) && g.vertex_count() % 4 == 0) return FilterVerdict::NoHist;
  return FilterVerdict::Inconclusive;
}

// ---------------------------------------------------------------------------

void write_certificate(std::ostream& out, const Graph& g, const HistCertificate& cert) {
  out << "hist " << g.vertex_count() << '\n';
  for (const auto& e : cert.treeEdges.pairs(g)) out << e.u << ' ' << e.v << '\n';
}

EdgeSet read_certificate(std::istream& in, const Graph& g) {
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw GraphError(GraphErrorKind::ParseError, "empty certificate");
  std::istringstream header(lines.front());
  std::string word;
  int n = -1;
  if (!(header >> word >> n) || word != "hist") {
    throw GraphError(GraphErrorKind::ParseError, "certificate must start with \"hist n\"");
  }
  if (n != g.vertex_count()) {
    throw GraphError(GraphErrorKind::HostMismatch, "certificate is for " + std::to_string(n) +
                                                       " vertices, graph has " +
                                                       std::to_string(g.vertex_count()));
  }
  if (static_cast<int>(lines.size()) - 1 != n - 1) {
    throw GraphError(GraphErrorKind::ParseError, "certificate lists " +
                                                     std::to_string(lines.size() - 1) +
                                                     " edges, expected " + std::to_string(n - 1));
  }
  std::vector<Edge> pairs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    Edge e;
    if (!(row >> e.u >> e.v)) throw GraphError(GraphErrorKind::ParseError, "bad edge: " + lines[i]);
    pairs.push_back(e);
  }
  return EdgeSet::from_pairs(g, pairs);
}

}  // namespace histlab::hist
