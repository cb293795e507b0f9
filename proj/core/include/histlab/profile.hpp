#pragma once

#include <optional>
#include <vector>

#include "histlab/graph.hpp"

namespace histlab {

/// Structural summary of a graph.
struct GraphProfile {
  int n = 0;
  int m = 0;
  bool isCubic = false;
  bool isConnected = false;
  bool isBipartite = false;
  /// Colour 0/1 per vertex; present exactly when isBipartite. Each component
  /// gives colour 0 to its smallest vertex.
  std::optional<std::vector<int>> bipartition;
  /// Length of a shortest cycle; nullopt for forests.
  std::optional<int> girth;

  bool operator==(const GraphProfile&) const = default;
};

GraphProfile classify(const Graph& g);

bool is_cubic(const Graph& g);
bool is_connected(const Graph& g);
int component_count(const Graph& g);

/// Component id per vertex, numbered by smallest member.
std::vector<int> component_labels(const Graph& g);

std::optional<std::vector<int>> bipartition(const Graph& g);
std::optional<int> girth(const Graph& g);

}  // namespace histlab
