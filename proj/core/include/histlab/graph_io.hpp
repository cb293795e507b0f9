#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "histlab/graph.hpp"

namespace histlab {

inline constexpr int kGraph6MaxVertices = 258047;

/// Decodes one graph6 line. Accepts the optional ">>graph6<<" prefix and a
/// trailing line terminator; anything else outside the encoded payload is an
/// error.
Graph parse_graph6(std::string_view text);

/// Encodes g using the shortest legal size header.
std::string write_graph6(const Graph& g);

/// Reads every non-blank line of a multi-graph graph6 stream.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// Edge-list text: "n m" then m lines "u v", 0-based; '#' starts a comment.
/// Pairs are returned in file order, which embedding files index into.
struct EdgeListData {
  int n = 0;
  std::vector<Edge> edges;
};

EdgeListData parse_edge_list_block(std::istream& in);
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// Role annotation for DOT output.
struct DotStyle {
  /// When set, edges inside are tagged class=tree and the rest class=cycle.
  std::optional<EdgeSet> treeEdges;
  std::string name = "G";
};

void write_dot(std::ostream& out, const Graph& g, const DotStyle& style = {});

}  // namespace histlab
