#include "histlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace histlab {

std::string_view to_string(GraphErrorKind kind) noexcept {
  switch (kind) {
    case GraphErrorKind::SelfLoop: return "SelfLoop";
    case GraphErrorKind::ParallelEdge: return "ParallelEdge";
    case GraphErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case GraphErrorKind::EdgeOutOfRange: return "EdgeOutOfRange";
    case GraphErrorKind::HostMismatch: return "HostMismatch";
    case GraphErrorKind::MalformedHeader: return "MalformedHeader";
    case GraphErrorKind::TruncatedPayload: return "TruncatedPayload";
    case GraphErrorKind::InvalidByte: return "InvalidByte";
    case GraphErrorKind::TrailingData: return "TrailingData";
    case GraphErrorKind::TooManyVertices: return "TooManyVertices";
    case GraphErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) {
    throw GraphError(GraphErrorKind::VertexOutOfRange, "negative vertex count");
  }
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw GraphError(GraphErrorKind::VertexOutOfRange,
                       "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) {
      throw GraphError(GraphErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw GraphError(GraphErrorKind::ParallelEdge, "repeated edge (" + std::to_string(dup->u) +
                                                       "," + std::to_string(dup->v) + ")");
  }
  edges_ = std::move(edges);

  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const auto& e : edges_) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];

  std::vector<std::pair<Vertex, int>> slots(static_cast<std::size_t>(offsets_.back()));
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (int i = 0; i < edge_count(); ++i) {
    const auto& e = edges_[i];
    slots[fill[e.u]++] = {e.v, i};
    slots[fill[e.v]++] = {e.u, i};
  }
  for (int v = 0; v < n; ++v) {
    std::sort(slots.begin() + offsets_[v], slots.begin() + offsets_[v + 1]);
  }
  neighbors_.reserve(slots.size());
  incident_.reserve(slots.size());
  for (const auto& [w, idx] : slots) {
    neighbors_.push_back(w);
    incident_.push_back(idx);
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw GraphError(GraphErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) +
                                                           " outside 0.." + std::to_string(n_ - 1));
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return {neighbors_.data() + offsets_[v], static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
}

std::span<const int> Graph::incident_edges(Vertex v) const {
  check_vertex(v);
  return {incident_.data() + offsets_[v], static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return offsets_[v + 1] - offsets_[v];
}

std::optional<int> Graph::edge_index(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return incident_[offsets_[u] + static_cast<int>(it - nb.begin())];
}

Vertex Graph::other(int e, Vertex v) const {
  const auto& ed = edge(e);
  return ed.u == v ? ed.v : ed.u;
}

// ---------------------------------------------------------------------------

EdgeSet::EdgeSet(const Graph& host) : EdgeSet(host.edge_count(), host.vertex_count()) {}

EdgeSet::EdgeSet(int edgeCount, int vertexCount)
    : edgeCount_(edgeCount),
      vertexCount_(vertexCount),
      words_(static_cast<std::size_t>((edgeCount + 63) / 64), 0) {}

EdgeSet EdgeSet::from_indices(const Graph& host, std::span<const int> indices) {
  EdgeSet s(host);
  for (int e : indices) s.insert(e);
  return s;
}

EdgeSet EdgeSet::from_pairs(const Graph& host, std::span<const Edge> pairs) {
  EdgeSet s(host);
  for (const auto& p : pairs) {
    auto idx = host.edge_index(p.u, p.v);
    if (!idx) {
      throw GraphError(GraphErrorKind::EdgeOutOfRange, "(" + std::to_string(p.u) + "," +
                                                           std::to_string(p.v) +
                                                           ") is not an edge of the host graph");
    }
    s.insert(*idx);
  }
  return s;
}

EdgeSet EdgeSet::all(const Graph& host) {
  EdgeSet s(host);
  for (int e = 0; e < host.edge_count(); ++e) s.insert(e);
  return s;
}

void EdgeSet::check_index(int e) const {
  if (e < 0 || e >= edgeCount_) {
    throw GraphError(GraphErrorKind::EdgeOutOfRange, "edge index " + std::to_string(e) +
                                                         " outside 0.." +
                                                         std::to_string(edgeCount_ - 1));
  }
}

bool EdgeSet::contains(int e) const {
  check_index(e);
  return (words_[e >> 6] >> (e & 63)) & 1U;
}

void EdgeSet::insert(int e) {
  check_index(e);
  words_[e >> 6] |= std::uint64_t{1} << (e & 63);
}

void EdgeSet::erase(int e) {
  check_index(e);
  words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
}

int EdgeSet::size() const noexcept {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

std::vector<int> EdgeSet::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits != 0) {
      out.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Edge> EdgeSet::pairs(const Graph& host) const {
  if (!compatible_with(host)) {
    throw GraphError(GraphErrorKind::HostMismatch, "edge set belongs to a different graph");
  }
  std::vector<Edge> out;
  for (int e : indices()) out.push_back(host.edge(e));
  return out;
}

EdgeSet EdgeSet::complement() const {
  EdgeSet c(edgeCount_, vertexCount_);
  for (std::size_t w = 0; w < words_.size(); ++w) c.words_[w] = ~words_[w];
  if (edgeCount_ % 64 != 0 && !c.words_.empty()) {
    c.words_.back() &= (std::uint64_t{1} << (edgeCount_ % 64)) - 1;
  }
  return c;
}

// ---------------------------------------------------------------------------

EdgeInducedSubgraph induced_edge_subgraph(const Graph& g, const EdgeSet& s) {
  if (!s.compatible_with(g)) {
    throw GraphError(GraphErrorKind::HostMismatch, "edge set belongs to a different graph");
  }
  std::vector<int> newIndex(static_cast<std::size_t>(g.vertex_count()), -1);
  const auto chosen = s.indices();
  for (int e : chosen) {
    newIndex[g.edge(e).u] = 0;
    newIndex[g.edge(e).v] = 0;
  }
  EdgeInducedSubgraph out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (newIndex[v] == 0) {
      newIndex[v] = static_cast<int>(out.originalVertex.size());
      out.originalVertex.push_back(v);
    }
  }
  std::vector<Edge> edges;
  edges.reserve(chosen.size());
  for (int e : chosen) edges.push_back({newIndex[g.edge(e).u], newIndex[g.edge(e).v]});
  out.graph = Graph(static_cast<int>(out.originalVertex.size()), std::move(edges));
  return out;
}

Graph remove_edges(const Graph& g, const EdgeSet& s) {
  if (!s.compatible_with(g)) {
    throw GraphError(GraphErrorKind::HostMismatch, "edge set belongs to a different graph");
  }
  std::vector<Edge> kept;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!s.contains(e)) kept.push_back(g.edge(e));
  }
  return Graph(g.vertex_count(), std::move(kept));
}

}  // namespace histlab
