#pragma once

// Brute-force reference computations. They use only Graph accessors so they
// stay independent of the algorithms under test.

#include <optional>
#include <vector>

#include "histlab/graph.hpp"

namespace oracle {

using histlab::Graph;
using histlab::Vertex;

/// Every spanning tree of g as a sorted list of edge indices, by trying all
/// (n-1)-subsets of edges.
std::vector<std::vector<int>> spanning_trees(const Graph& g);

/// Spanning trees with no vertex of tree-degree 2.
std::vector<std::vector<int>> hists(const Graph& g);

/// True when some closed walk has odd length (parity-doubled reachability).
bool has_odd_cycle(const Graph& g);

/// Every simple cycle, as a vertex sequence starting at its smallest vertex
/// with the smaller neighbour second.
std::vector<std::vector<Vertex>> simple_cycles(const Graph& g, int maxLen);

/// True when no two non-consecutive cycle vertices are adjacent.
bool chordless(const Graph& g, const std::vector<Vertex>& cycle);

/// Smallest edge set (size <= maxSize) whose removal leaves two components
/// that each contain a cycle; nullopt when none exists within maxSize.
std::optional<int> cyclic_cut_size(const Graph& g, int maxSize);

/// Removing `cut` leaves a component holding `a` and another holding `b`,
/// and each contains a cycle.
bool separates_cycles(const Graph& g, const std::vector<int>& cut, const std::vector<Vertex>& a,
                      const std::vector<Vertex>& b);

/// Smallest vertex set whose removal disconnects g or leaves one vertex.
int vertex_connectivity(const Graph& g);

/// Components of g minus the given vertices and edges, as a label per vertex
/// (-1 for removed vertices).
std::vector<int> components(const Graph& g, const std::vector<char>& removedVertex,
                            const std::vector<char>& removedEdge);

}  // namespace oracle
