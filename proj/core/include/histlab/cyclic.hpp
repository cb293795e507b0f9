#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "histlab/construct.hpp"
#include "histlab/error.hpp"
#include "histlab/graph.hpp"

/// Cyclic edge-connectivity, vertex connectivity, and the check that
/// inflations of well-connected bases are cyclically well connected.
///
/// cyclic_edge_connectivity takes the minimum, over vertex-disjoint pairs of
/// chordless cycles, of the minimum edge cut separating the two cycles. This
/// is exact: every cut separating two chordless cycles leaves a cycle on both
/// sides, and conversely each side of a cyclic edge cut contains some cycle
/// and hence a chordless one (a shortest cycle inside that side's vertex set),
/// which the cut separates from its counterpart.
namespace histlab::cyclic {

enum class CyclicErrorKind {
  NotCubic,
  Disconnected,
  OverlappingTerminals,
  EmptyTerminals,
  NotAnInflation,
};

std::string_view to_string(CyclicErrorKind kind) noexcept;
using CyclicError = KindedError<CyclicErrorKind>;

/// Chordless cycles of length 3..maxLen, each starting at its smallest vertex
/// and continuing to the smaller of its two neighbours; sorted by length,
/// then lexicographically.
std::vector<std::vector<Vertex>> induced_cycles(const Graph& g, int maxLen);

struct FlowResult {
  int value = 0;
  /// False when the search stopped at the limit; cut fields are then unset.
  bool complete = true;
  /// Minimum edge cut; edges with exactly one end reachable from the sources.
  EdgeSet cut;
  /// Vertices on the source side of the cut.
  std::vector<Vertex> sourceSide;
};

/// Maximum number of edge-disjoint paths between the vertex sets, each set
/// contracted to a single terminal. With a limit, stops once the value
/// reaches it.
FlowResult max_flow_unit(const Graph& g, const std::vector<Vertex>& sources, const std::vector<Vertex>& sinks,
                         std::optional<int> limit = std::nullopt);

enum class CutKind { Finite, Undefined };
std::string_view to_string(CutKind kind) noexcept;

struct CutReport {
  CutKind kind = CutKind::Undefined;
  int value = 0;
  std::optional<EdgeSet> witnessCut;
  /// The first disjoint cycle pair (in induced_cycles order) attaining value.
  std::vector<std::vector<Vertex>> witnessCycles;
  /// Set when cycle enumeration was length-limited: value is then only an
  /// upper bound, and Undefined means no pair was found under the limit.
  bool capped = false;
  std::string method = "induced-cycle-pairs+unit-maxflow";
};

struct CecOptions {
  /// Longest chordless cycle considered; unlimited when unset.
  std::optional<int> maxCycleLength;
};

CutReport cyclic_edge_connectivity(const Graph& g, const CecOptions& options = {});

/// Minimum number of vertices whose removal disconnects g or leaves a single
/// vertex; n - 1 for complete graphs.
int vertex_connectivity(const Graph& g);

enum class TheoremStatus { Pass, Violation, PremiseNotMet };
std::string_view to_string(TheoremStatus s) noexcept;

struct InflationTheoremReport {
  TheoremStatus status = TheoremStatus::PremiseNotMet;
  int baseConnectivity = 0;
  /// Unset for forests.
  std::optional<int> baseGirth;
  /// min(connectivity, girth).
  int kStar = 0;
  CutReport cec;
};

/// Requires r to contract back to h; throws CyclicError(NotAnInflation) otherwise.
InflationTheoremReport check_inflation_theorem(const construct::BaseGraph& h, const construct::InflationResult& r);

}  // namespace histlab::cyclic
