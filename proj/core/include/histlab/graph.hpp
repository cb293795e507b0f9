#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "histlab/error.hpp"

namespace histlab {

using Vertex = int;

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept in strictly increasing lexicographic order, which fixes the
/// edge index of every pair; EdgeSet, RotationSystem and every report refer to
/// edges through these indices. Adjacency is stored in CSR form with each
/// neighbour list sorted ascending; incident_edges(v)[i] is the index of the
/// edge joining v and neighbors(v)[i].
///
/// Graph values are immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Normalizes each pair to u < v and sorts. Throws GraphError on
  /// self-loops, repeated pairs or endpoints outside 0..n-1.
  Graph(int n, std::vector<Edge> edges);

  [[nodiscard]] int vertex_count() const noexcept { return n_; }
  [[nodiscard]] int edge_count() const noexcept {
    return static_cast<int>(edges_.size());
  }

  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const;
  [[nodiscard]] std::span<const int> incident_edges(Vertex v) const;
  [[nodiscard]] int degree(Vertex v) const;

  [[nodiscard]] std::optional<int> edge_index(Vertex u, Vertex v) const;
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return edge_index(u, v).has_value(); }

  /// The endpoint of edge e that is not v.
  [[nodiscard]] Vertex other(int e, Vertex v) const;

  bool operator==(const Graph& rhs) const noexcept {
    return n_ == rhs.n_ && edges_ == rhs.edges_;
  }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> neighbors_;
  std::vector<int> incident_;
};

/// Subset of the edges of a host graph, stored as a bitset over edge indices.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(const Graph& host);
  EdgeSet(int edgeCount, int vertexCount);

  static EdgeSet from_indices(const Graph& host, std::span<const int> indices);
  static EdgeSet from_pairs(const Graph& host, std::span<const Edge> pairs);
  static EdgeSet all(const Graph& host);

  [[nodiscard]] int capacity() const noexcept { return edgeCount_; }
  [[nodiscard]] int host_vertex_count() const noexcept { return vertexCount_; }
  [[nodiscard]] bool compatible_with(const Graph& host) const noexcept {
    return host.edge_count() == edgeCount_ && host.vertex_count() == vertexCount_;
  }

  [[nodiscard]] bool contains(int e) const;
  void insert(int e);
  void erase(int e);

  [[nodiscard]] int size() const noexcept;
  [[nodiscard]] bool empty() const noexcept { return size() == 0; }

  [[nodiscard]] std::vector<int> indices() const;
  [[nodiscard]] std::vector<Edge> pairs(const Graph& host) const;
  [[nodiscard]] EdgeSet complement() const;

  bool operator==(const EdgeSet& rhs) const noexcept = default;

  /// Lexicographic order on the ascending lists of edge indices.
  friend bool operator<(const EdgeSet& a, const EdgeSet& b) { return a.indices() < b.indices(); }

 private:
  void check_index(int e) const;

  int edgeCount_ = 0;
  int vertexCount_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Result of induced_edge_subgraph: the subgraph on the end vertices of an
/// edge set, plus the original index of each of its vertices (ascending).
struct EdgeInducedSubgraph {
  Graph graph;
  std::vector<Vertex> originalVertex;
};

/// The subgraph induced by the edges of s; its vertex set is exactly the set
/// of end vertices of s, so no isolated vertices appear.
EdgeInducedSubgraph induced_edge_subgraph(const Graph& g, const EdgeSet& s);

/// g with the edges of s removed (same vertex set).
Graph remove_edges(const Graph& g, const EdgeSet& s);

}  // namespace histlab
