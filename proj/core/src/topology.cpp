#include "histlab/topology.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "histlab/graph_io.hpp"
#include "histlab/profile.hpp"
#include "histlab/union_find.hpp"

namespace histlab::topology {

std::string_view to_string(TopologyErrorKind kind) noexcept {
  switch (kind) {
    case TopologyErrorKind::InvalidRotation: return "InvalidRotation";
    case TopologyErrorKind::OddEulerDefect: return "OddEulerDefect";
    case TopologyErrorKind::NotPlanarEmbedding: return "NotPlanarEmbedding";
    case TopologyErrorKind::NotCubic: return "NotCubic";
    case TopologyErrorKind::Disconnected: return "Disconnected";
    case TopologyErrorKind::KOutOfRange: return "KOutOfRange";
  }
  return "Unknown";
}

void RotationSystem::validate(const Graph& g) const {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) {
    throw TopologyError(TopologyErrorKind::InvalidRotation,
                        "rotation lists " + std::to_string(order.size()) + " vertices, graph has " +
                            std::to_string(n));
  }
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> have = order[v];
    std::sort(have.begin(), have.end());
    auto inc = g.incident_edges(v);
    std::vector<int> want(inc.begin(), inc.end());
    std::sort(want.begin(), want.end());
    if (have != want) {
      throw TopologyError(TopologyErrorKind::InvalidRotation,
                          "rotation at vertex " + std::to_string(v) +
                              " is not a permutation of its incident edges");
    }
  }
}

RotationSystem RotationSystem::from_neighbor_order(const Graph& g,
                                                   const std::vector<std::vector<Vertex>>& neighbors) {
  RotationSystem rot;
  rot.order.resize(neighbors.size());
  for (std::size_t v = 0; v < neighbors.size(); ++v) {
    for (Vertex w : neighbors[v]) {
      auto e = g.edge_index(static_cast<Vertex>(v), w);
      if (!e) {
        throw TopologyError(TopologyErrorKind::InvalidRotation,
                            "rotation at " + std::to_string(v) + " names non-neighbour " +
                                std::to_string(w));
      }
      rot.order[v].push_back(*e);
    }
  }
  rot.validate(g);
  return rot;
}

std::vector<std::vector<Vertex>> RotationSystem::neighbor_order(const Graph& g) const {
  std::vector<std::vector<Vertex>> out(order.size());
  for (std::size_t v = 0; v < order.size(); ++v) {
    for (int e : order[v]) out[v].push_back(g.other(e, static_cast<Vertex>(v)));
  }
  return out;
}

bool Face::is_cycle() const {
  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() && sorted.size() >= 3;
}

FaceSet trace_faces(const Graph& g, const RotationSystem& rot) {
  rot.validate(g);
  const int m = g.edge_count();
  // Arc 2e runs u->v along edge e = (u,v), arc 2e+1 runs v->u.
  // position[2e + s] is the index of e in the rotation at the arc's head.
  std::vector<int> position(static_cast<std::size_t>(2 * m), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& list = rot.order[v];
    for (std::size_t i = 0; i < list.size(); ++i) {
      const int e = list[i];
      const int arcInto = g.edge(e).v == v ? 2 * e : 2 * e + 1;
      position[arcInto] = static_cast<int>(i);
    }
  }
  auto tail = [&](int arc) { return arc % 2 == 0 ? g.edge(arc / 2).u : g.edge(arc / 2).v; };
  auto head = [&](int arc) { return arc % 2 == 0 ? g.edge(arc / 2).v : g.edge(arc / 2).u; };

  FaceSet out;
  std::vector<char> used(static_cast<std::size_t>(2 * m), 0);
  for (int start = 0; start < 2 * m; ++start) {
    if (used[start]) continue;
    Face face;
    int arc = start;
    while (!used[arc]) {
      used[arc] = 1;
      face.vertices.push_back(tail(arc));
      face.edges.push_back(arc / 2);
      const Vertex v = head(arc);
      const auto& list = rot.order[v];
      const int next = list[(position[arc] + 1) % list.size()];
      arc = g.edge(next).u == v ? 2 * next : 2 * next + 1;
    }
    ++out.lengthHistogram[face.length()];
    out.faces.push_back(std::move(face));
  }
  return out;
}

namespace {

int genus_from_faces(const Graph& g, int faceCount) {
  const int chi = g.vertex_count() - g.edge_count() + faceCount;
  if ((2 - chi) % 2 != 0 || chi > 2) {
    throw TopologyError(TopologyErrorKind::OddEulerDefect,
                        "V - E + F = " + std::to_string(chi) + " is not 2 - 2g for any g >= 0");
  }
  return (2 - chi) / 2;
}

/// Connectivity of g minus the vertices flagged in removed.
bool connected_without(const Graph& g, const std::vector<char>& removed) {
  const int n = g.vertex_count();
  Vertex start = -1;
  int alive = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (removed[w] || seen[w]) continue;
      seen[w] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == alive;
}

void require_plane_cubic(const Graph& g, const RotationSystem& rot) {
  rot.validate(g);
  if (!is_cubic(g)) throw TopologyError(TopologyErrorKind::NotCubic, "graph is not cubic");
  if (!is_connected(g)) throw TopologyError(TopologyErrorKind::Disconnected, "graph is not connected");
  const int genus = euler_genus(g, rot);
  if (genus != 0) {
    throw TopologyError(TopologyErrorKind::NotPlanarEmbedding,
                        "embedding has genus " + std::to_string(genus));
  }
}

struct FacialCycle {
  std::vector<Vertex> vertices;
  std::vector<int> edges;
};

std::vector<FacialCycle> facial_cycles(const Graph& g, const RotationSystem& rot) {
  std::vector<FacialCycle> out;
  for (auto& f : trace_faces(g, rot).faces) {
    if (f.is_cycle()) out.push_back({std::move(f.vertices), std::move(f.edges)});
  }
  return out;
}

/// reach[i][s]: some subset of cycles i.. has total length s (disjointness ignored).
std::vector<std::vector<char>> suffix_sums(const std::vector<FacialCycle>& cycles, int target) {
  const std::size_t f = cycles.size();
  std::vector<std::vector<char>> reach(f + 1, std::vector<char>(static_cast<std::size_t>(target + 1), 0));
  reach[f][0] = 1;
  for (std::size_t i = f; i-- > 0;) {
    const int len = static_cast<int>(cycles[i].vertices.size());
    for (int s = 0; s <= target; ++s) {
      reach[i][s] = reach[i + 1][s] || (s >= len && reach[i + 1][s - len]);
    }
  }
  return reach;
}

}  // namespace

int euler_genus(const Graph& g, const RotationSystem& rot) {
  if (!is_connected(g)) throw TopologyError(TopologyErrorKind::Disconnected, "graph is not connected");
  return genus_from_faces(g, static_cast<int>(trace_faces(g, rot).faces.size()));
}

bool vertex_connectivity_at_least(const Graph& g, int k) {
  if (k < 1 || k > 3) {
    throw TopologyError(TopologyErrorKind::KOutOfRange,
                        "k must lie in 1..3, got " + std::to_string(k));
  }
  const int n = g.vertex_count();
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  if (!connected_without(g, removed)) return false;
  if (k == 1) return true;
  for (Vertex a = 0; a < n; ++a) {
    removed[a] = 1;
    if (!connected_without(g, removed)) return false;
    if (k == 3) {
      for (Vertex b = a + 1; b < n; ++b) {
        removed[b] = 1;
        const bool ok = connected_without(g, removed);
        removed[b] = 0;
        if (!ok) return false;
      }
    }
    removed[a] = 0;
  }
  return true;
}

FullereneReport is_fullerene(const Graph& g, const RotationSystem& rot) {
  rot.validate(g);
  FullereneReport r;
  r.cubic = is_cubic(g);
  const FaceSet faces = trace_faces(g, rot);
  for (const auto& [len, count] : faces.lengthHistogram) {
    if (len == 5) r.pentagons = count;
    else if (len == 6) r.hexagons = count;
    else r.otherFaces += count;
  }
  if (!is_connected(g)) return r;
  r.genus = genus_from_faces(g, static_cast<int>(faces.faces.size()));
  r.threeConnected = vertex_connectivity_at_least(g, 3);
  r.isFullerene = r.cubic && r.genus == 0 && r.threeConnected && r.otherFaces == 0;
  return r;
}

HexangulationReport is_hexangulation(const Graph& g, const RotationSystem& rot) {
  rot.validate(g);
  HexangulationReport r;
  const FaceSet faces = trace_faces(g, rot);
  r.faceCount = static_cast<int>(faces.faces.size());
  if (!is_connected(g)) return r;
  r.genus = genus_from_faces(g, r.faceCount);
  r.twoConnected = g.vertex_count() >= 3 && vertex_connectivity_at_least(g, 2);
  const bool allHexagons = faces.lengthHistogram.size() == 1 && faces.lengthHistogram.count(6) == 1;
  r.isHexangulation = r.twoConnected && allHexagons;
  return r;
}

hist::FilterVerdict facial_filter(const Graph& g, const RotationSystem& rot) {
  require_plane_cubic(g, rot);
  const auto cycles = facial_cycles(g, rot);
  const int target = g.vertex_count() / 2 + 1;
  return suffix_sums(cycles, target)[0][target] ? hist::FilterVerdict::Inconclusive
                                                 : hist::FilterVerdict::NoHist;
}

hist::SolveReport planar_hist_solve(const Graph& g, const RotationSystem& rot,
                                    const PlanarSolveOptions& options) {
  require_plane_cubic(g, rot);
  const int n = g.vertex_count();
  const int target = n / 2 + 1;
  const auto cycles = facial_cycles(g, rot);
  const auto reach = suffix_sums(cycles, target);

  hist::SolveReport report;
  if (!reach[0][target]) {
    report.verdict = hist::Verdict::NoHist;
    report.filterUsed = hist::FilterUsed::Facial;
    if (options.mode == hist::SolveMode::Count || options.mode == hist::SolveMode::EnumerateAll) {
      report.count = 0;
    }
    return report;
  }

  const bool stopAtFirst =
      options.mode == hist::SolveMode::Decide || options.mode == hist::SolveMode::First;
  std::vector<char> usedVertex(static_cast<std::size_t>(n), 0);
  std::vector<std::size_t> chosen;
  std::vector<hist::HistCertificate> found;
  bool exhausted = false;

  auto evaluate = [&] {
    EdgeSet removed(g);
    for (std::size_t i : chosen) {
      for (int e : cycles[i].edges) removed.insert(e);
    }
    const EdgeSet tree = removed.complement();
    UnionFind uf(n);
    for (int e : tree.indices()) uf.unite(g.edge(e).u, g.edge(e).v);
    if (uf.set_count() == 1) found.push_back(hist::verify_hist(g, tree));
  };

  auto search = [&](auto&& self, std::size_t i, int remaining) -> bool {
    if (report.nodesExplored >= options.nodeBudget) {
      exhausted = true;
      return true;
    }
    ++report.nodesExplored;
    if (remaining == 0) {
      evaluate();
      return stopAtFirst && !found.empty();
    }
    if (i == cycles.size() || !reach[i][remaining]) return false;
    const auto& c = cycles[i];
    const int len = static_cast<int>(c.vertices.size());
    const bool fits = len <= remaining && std::none_of(c.vertices.begin(), c.vertices.end(),
                                                       [&](Vertex v) { return usedVertex[v] != 0; });
    if (fits) {
      for (Vertex v : c.vertices) usedVertex[v] = 1;
      chosen.push_back(i);
      const bool stop = self(self, i + 1, remaining - len);
      chosen.pop_back();
      for (Vertex v : c.vertices) usedVertex[v] = 0;
      if (stop) return true;
    }
    return self(self, i + 1, remaining);
  };
  search(search, 0, target);

  std::sort(found.begin(), found.end());
  // Two faces with the same vertex set cannot both be chosen, but distinct
  // face sets always give distinct complements; dedupe defensively anyway.
  found.erase(std::unique(found.begin(), found.end()), found.end());

  if (!found.empty() && stopAtFirst) {
    report.verdict = hist::Verdict::HasHist;
    report.certificates.assign(found.begin(), found.begin() + 1);
    return report;
  }
  if (exhausted) {
    report.verdict = hist::Verdict::BudgetExceeded;
    return report;
  }
  report.verdict = found.empty() ? hist::Verdict::NoHist : hist::Verdict::HasHist;
  if (!stopAtFirst) {
    report.count = found.size();
    if (options.mode == hist::SolveMode::EnumerateAll) report.certificates = std::move(found);
  } else if (!found.empty()) {
    report.certificates.assign(found.begin(), found.begin() + 1);
  }
  return report;
}

// ---------------------------------------------------------------------------

Embedding read_embedding(std::istream& in) {
  const EdgeListData data = parse_edge_list_block(in);
  Embedding out{Graph(data.n, data.edges), {}};
  const Graph& g = out.graph;

  std::string line;
  bool sawHeader = false;
  std::vector<char> seen(static_cast<std::size_t>(data.n), 0);
  out.rotation.order.assign(static_cast<std::size_t>(data.n), {});
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    if (!sawHeader) {
      std::string word, extra;
      if (!(row >> word) || word != "rotations" || (row >> extra)) {
        throw GraphError(GraphErrorKind::ParseError, "expected \"rotations\", got: " + line);
      }
      sawHeader = true;
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw GraphError(GraphErrorKind::ParseError, "bad rotation line: " + line);
    std::istringstream vpart(line.substr(0, colon));
    std::istringstream epart(line.substr(colon + 1));
    int v = -1;
    if (!(vpart >> v) || v < 0 || v >= data.n) {
      throw GraphError(GraphErrorKind::ParseError, "bad vertex in rotation line: " + line);
    }
    if (seen[v]) throw GraphError(GraphErrorKind::ParseError, "duplicate rotation for vertex " + std::to_string(v));
    seen[v] = 1;
    int fileEdge = 0;
    while (epart >> fileEdge) {
      if (fileEdge < 0 || fileEdge >= static_cast<int>(data.edges.size())) {
        throw GraphError(GraphErrorKind::EdgeOutOfRange,
                         "edge index " + std::to_string(fileEdge) + " out of range");
      }
      const Edge& e = data.edges[fileEdge];
      out.rotation.order[v].push_back(*g.edge_index(e.u, e.v));
    }
    if (!epart.eof()) throw GraphError(GraphErrorKind::ParseError, "bad edge index in: " + line);
  }
  if (!sawHeader) throw GraphError(GraphErrorKind::ParseError, "missing \"rotations\" section");
  for (int v = 0; v < data.n; ++v) {
    if (!seen[v]) throw GraphError(GraphErrorKind::ParseError, "no rotation for vertex " + std::to_string(v));
  }
  out.rotation.validate(g);
  return out;
}

void write_embedding(std::ostream& out, const Graph& g, const RotationSystem& rot) {
  rot.validate(g);
  write_edge_list(out, g);
  out << "rotations\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << v << ':';
    for (int e : rot.order[v]) out << ' ' << e;
    out << '\n';
  }
}

}  // namespace histlab::topology
