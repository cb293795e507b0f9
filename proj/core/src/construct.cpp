#include "histlab/construct.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "histlab/profile.hpp"

namespace histlab::construct {

std::string_view to_string(ConstructErrorKind kind) noexcept {
  switch (kind) {
    case ConstructErrorKind::MinDegreeTooLow: return "MinDegreeTooLow";
    case ConstructErrorKind::NotSimple: return "NotSimple";
    case ConstructErrorKind::Disconnected: return "Disconnected";
    case ConstructErrorKind::OddDegreeVertex: return "OddDegreeVertex";
    case ConstructErrorKind::NotRegularEven: return "NotRegularEven";
    case ConstructErrorKind::KTooSmall: return "KTooSmall";
    case ConstructErrorKind::ParityViolation: return "ParityViolation";
    case ConstructErrorKind::InvalidParameter: return "InvalidParameter";
    case ConstructErrorKind::RejectionLimitExceeded: return "RejectionLimitExceeded";
    case ConstructErrorKind::ParameterTooSmall: return "ParameterTooSmall";
    case ConstructErrorKind::DegenerateWrap: return "DegenerateWrap";
    case ConstructErrorKind::NotCubicHexangulation: return "NotCubicHexangulation";
    case ConstructErrorKind::NotChordlessSixCycle: return "NotChordlessSixCycle";
    case ConstructErrorKind::CutNotWellDefined: return "CutNotWellDefined";
    case ConstructErrorKind::ResultNotHexangulation: return "ResultNotHexangulation";
    case ConstructErrorKind::UnknownName: return "UnknownName";
    case ConstructErrorKind::MissingDataFile: return "MissingDataFile";
  }
  return "Unknown";
}

BaseGraph BaseGraph::from(Graph g) {
  BaseGraph b;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    if (d < 3) {
      throw ConstructError(ConstructErrorKind::MinDegreeTooLow,
                           "vertex " + std::to_string(v) + " has degree " + std::to_string(d));
    }
    b.degrees.push_back(d);
  }
  b.graph = std::move(g);
  return b;
}

BaseGraph BaseGraph::from_edges(int n, std::vector<Edge> edges) {
  try {
    return from(Graph(n, std::move(edges)));
  } catch (const GraphError& err) {
    if (err.kind() == GraphErrorKind::SelfLoop || err.kind() == GraphErrorKind::ParallelEdge) {
      throw ConstructError(ConstructErrorKind::NotSimple, err.what());
    }
    throw;
  }
}

Orientation Orientation::from_directions(const Graph& g, std::vector<bool> lowToHigh) {
  Orientation o;
  o.lowToHigh = std::move(lowToHigh);
  o.indegree.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  o.outdegree.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    ++o.outdegree[o.tail(g, e)];
    ++o.indegree[o.head(g, e)];
  }
  return o;
}

Vertex Orientation::tail(const Graph& g, int e) const {
  return lowToHigh.at(static_cast<std::size_t>(e)) ? g.edge(e).u : g.edge(e).v;
}

Vertex Orientation::head(const Graph& g, int e) const {
  return lowToHigh.at(static_cast<std::size_t>(e)) ? g.edge(e).v : g.edge(e).u;
}

Orientation Orientation::reversed() const {
  Orientation r;
  r.lowToHigh.reserve(lowToHigh.size());
  for (bool b : lowToHigh) r.lowToHigh.push_back(!b);
  r.indegree = outdegree;
  r.outdegree = indegree;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw ConstructError(ConstructErrorKind::Disconnected, "base graph is not connected");
}

/// Shared assembly: orders[x] lists the base edges around C_x.
InflationResult assemble(const Graph& h, const std::vector<std::vector<int>>& orders) {
  const int n = h.vertex_count();
  std::vector<int> offset(static_cast<std::size_t>(n + 1), 0);
  for (Vertex x = 0; x < n; ++x) offset[x + 1] = offset[x] + static_cast<int>(orders[x].size());

  InflationResult r;
  r.vertexMap.resize(static_cast<std::size_t>(offset[n]));
  // slot[e][side]: inflated vertex carrying base edge e at its u (0) or v (1) end.
  std::vector<std::array<int, 2>> slot(static_cast<std::size_t>(h.edge_count()));
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> cycles;
  for (Vertex x = 0; x < n; ++x) {
    const int d = static_cast<int>(orders[x].size());
    std::vector<Vertex> cycle;
    for (int p = 0; p < d; ++p) {
      const Vertex a = offset[x] + p;
      r.vertexMap[a] = {x, p};
      cycle.push_back(a);
      edges.push_back({a, offset[x] + (p + 1) % d});
      const int e = orders[x][p];
      slot[e][h.edge(e).u == x ? 0 : 1] = a;
    }
    cycles.push_back(std::move(cycle));
  }
  for (const auto& s : slot) edges.push_back({s[0], s[1]});
  r.inflated = Graph(offset[n], std::move(edges));
  r.factor = hist::TwoRegularSubgraph::from_cycles(r.inflated, cycles);
  return r;
}

}  // namespace

InflationResult inflate(const BaseGraph& h, RotationChoice choice) {
  const Graph& g = h.graph;
  require_connected(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 3) {
      throw ConstructError(ConstructErrorKind::MinDegreeTooLow,
                           "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    }
  }
  std::vector<std::vector<int>> orders;
  std::mt19937_64 rng(choice.seed.value_or(0));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident_edges(v);
    std::vector<int> order(inc.begin(), inc.end());  // ascending neighbour
    if (choice.seed) std::shuffle(order.begin(), order.end(), rng);
    orders.push_back(std::move(order));
  }
  return assemble(g, orders);
}

Graph contract_factor(const InflationResult& r) {
  const Graph& g = r.inflated;
  int baseCount = 0;
  for (const auto& iv : r.vertexMap) baseCount = std::max(baseCount, iv.base + 1);
  std::vector<Edge> edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (r.factor.edgeSet.contains(e)) continue;
    edges.push_back({r.vertexMap[g.edge(e).u].base, r.vertexMap[g.edge(e).v].base});
  }
  return Graph(baseCount, std::move(edges));
}

Orientation eulerian_orientation(const Graph& h) {
  const int n = h.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    if (h.degree(v) % 2 != 0) {
      throw ConstructError(ConstructErrorKind::OddDegreeVertex,
                           "vertex " + std::to_string(v) + " has odd degree " + std::to_string(h.degree(v)));
    }
  }
  std::vector<bool> dir(static_cast<std::size_t>(h.edge_count()), true);
  std::vector<char> used(static_cast<std::size_t>(h.edge_count()), 0);
  std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
  for (Vertex start = 0; start < n; ++start) {
    if (next[start] == h.incident_edges(start).size()) continue;
    std::vector<Vertex> stack{start};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      auto inc = h.incident_edges(v);
      while (next[v] < inc.size() && used[inc[next[v]]]) ++next[v];
      if (next[v] == inc.size()) {
        stack.pop_back();
        continue;
      }
      const int e = inc[next[v]];
      used[e] = 1;
      dir[e] = h.edge(e).u == v;
      stack.push_back(h.other(e, v));
    }
  }
  return Orientation::from_directions(h, std::move(dir));
}

InflationResult bipartite_inflate(const BaseGraph& h, int k) {
  if (k < 2) throw ConstructError(ConstructErrorKind::KTooSmall, "k must be at least 2, got " + std::to_string(k));
  const Graph& g = h.graph;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2 * k) {
      throw ConstructError(ConstructErrorKind::NotRegularEven,
                           "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                               ", expected " + std::to_string(2 * k));
    }
  }
  require_connected(g);
  const Orientation euler = eulerian_orientation(g);

  std::vector<std::vector<int>> orders;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    std::vector<int> in, out;
    for (int e : g.incident_edges(x)) (euler.head(g, e) == x ? in : out).push_back(e);
    std::sort(in.begin(), in.end());
    std::sort(out.begin(), out.end());
    std::vector<int> order;
    for (std::size_t i = 0; i < in.size(); ++i) {
      order.push_back(in[i]);
      order.push_back(out[i]);
    }
    orders.push_back(std::move(order));
  }
  InflationResult r = assemble(g, orders);

  const Graph& f = r.inflated;
  std::vector<int> colour(static_cast<std::size_t>(f.vertex_count()));
  for (Vertex a = 0; a < f.vertex_count(); ++a) colour[a] = r.vertexMap[a].position % 2 == 0 ? 1 : 0;
  std::vector<bool> dir(static_cast<std::size_t>(f.edge_count()));
  for (int e = 0; e < f.edge_count(); ++e) dir[e] = colour[f.edge(e).u] == 0;
  r.orientation = Orientation::from_directions(f, std::move(dir));
  r.coloring = std::move(colour);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<std::vector<Edge>> try_pairing(int n, int d, std::mt19937_64& rng) {
  std::vector<Vertex> points;
  points.reserve(static_cast<std::size_t>(n) * d);
  for (Vertex v = 0; v < n; ++v) points.insert(points.end(), static_cast<std::size_t>(d), v);
  std::shuffle(points.begin(), points.end(), rng);
  std::set<Edge> seen;
  for (std::size_t i = 0; i < points.size(); i += 2) {
    Edge e{std::min(points[i], points[i + 1]), std::max(points[i], points[i + 1])};
    if (e.u == e.v || !seen.insert(e).second) return std::nullopt;
  }
  return std::vector<Edge>(seen.begin(), seen.end());
}

}  // namespace

Graph random_regular(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 0) throw ConstructError(ConstructErrorKind::InvalidParameter, "need n >= 1 and d >= 0");
  if ((static_cast<long long>(n) * d) % 2 != 0) {
    throw ConstructError(ConstructErrorKind::ParityViolation,
                         "n*d = " + std::to_string(static_cast<long long>(n) * d) + " is odd");
  }
  if (d >= n) {
    throw ConstructError(ConstructErrorKind::InvalidParameter,
                         "degree " + std::to_string(d) + " needs more than " + std::to_string(n) + " vertices");
  }
  const bool viaComplement = d > (n - 1) / 2;
  const int degree = viaComplement ? n - 1 - d : d;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kRandomRegularRetryCap; ++attempt) {
    auto edges = try_pairing(n, degree, rng);
    if (!edges) continue;
    if (!viaComplement) return Graph(n, std::move(*edges));
    const Graph sparse(n, std::move(*edges));
    std::vector<Edge> dense;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!sparse.adjacent(u, v)) dense.push_back({u, v});
      }
    }
    return Graph(n, std::move(dense));
  }
  throw ConstructError(ConstructErrorKind::RejectionLimitExceeded,
                       "no simple pairing after " + std::to_string(kRandomRegularRetryCap) + " attempts");
}

}  // namespace histlab::construct
