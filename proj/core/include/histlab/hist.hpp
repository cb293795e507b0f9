#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "histlab/error.hpp"
#include "histlab/graph.hpp"

/// Homeomorphically irreducible spanning trees (Hists) of cubic graphs.
///
/// In a cubic graph every Hist T has only leaves and degree-3 vertices, so
/// E(G) splits into E(T) and the edge set H of vertex-disjoint cycles that
/// cover exactly the leaves of T. Counting gives t1 + t3 = n and t1 = t3 + 2,
/// hence |V(H)| = t1 = n/2 + 1, and G - E(H) = T is connected.
///
/// The converse also holds and is what hist_from_two_regular and
/// oracle_enumerate rely on: let H be 2-regular with G - E(H) connected and
/// |V(H)| = n/2 + 1. A 2-regular graph has as many edges as vertices, so
/// |E(H)| = n/2 + 1 and G - E(H) has 3n/2 - n/2 - 1 = n - 1 edges on n
/// vertices. Being connected, it is a spanning tree; vertices of H keep
/// degree 3 - 2 = 1 and all others keep degree 3, so the tree is a Hist.
namespace histlab::hist {

enum class HistErrorKind {
  NotCubic,
  Disconnected,
  HostMismatch,
  NotSpanning,
  ContainsCycle,
  DegreeTwoVertex,
  InvalidCertificate,
  NotTwoRegular,
  WrongVertexCount,
  NotNonSeparating,
  InstanceTooLarge,
};

std::string_view to_string(HistErrorKind kind) noexcept;

class HistError : public KindedError<HistErrorKind> {
 public:
  HistError(HistErrorKind kind, const std::string& what, std::optional<Vertex> vertex = {})
      : KindedError(kind, what), vertex_(vertex) {}

  /// Offending vertex for DegreeTwoVertex and NotTwoRegular.
  [[nodiscard]] std::optional<Vertex> vertex() const noexcept { return vertex_; }

 private:
  std::optional<Vertex> vertex_;
};

struct HistCertificate {
  EdgeSet treeEdges;
  int leafCount = 0;    // t1
  int branchCount = 0;  // t3

  bool operator==(const HistCertificate&) const = default;
  friend bool operator<(const HistCertificate& a, const HistCertificate& b) {
    return a.treeEdges < b.treeEdges;
  }
};

/// Vertex-disjoint union of simple cycles.
struct TwoRegularSubgraph {
  /// Each cycle starts at its smallest vertex and continues towards the
  /// smaller of its two cycle neighbours; cycles are ordered by first vertex.
  std::vector<std::vector<Vertex>> cycles;
  std::vector<Vertex> coveredVertices;  // ascending
  EdgeSet edgeSet;

  /// Decomposes an edge set whose every touched vertex has degree 2 in it.
  /// Throws HistError(NotTwoRegular) otherwise.
  static TwoRegularSubgraph from_edges(const Graph& g, const EdgeSet& edges);

  /// Builds from explicit cycles (vertex sequences). Throws
  /// HistError(NotTwoRegular) when a sequence is not a cycle of g or two
  /// cycles share a vertex.
  static TwoRegularSubgraph from_cycles(const Graph& g, const std::vector<std::vector<Vertex>>& cycles);

  [[nodiscard]] int vertex_count() const noexcept { return static_cast<int>(coveredVertices.size()); }
};

/// Checks that t is a spanning tree of g with every tree degree in {1, 3}.
HistCertificate verify_hist(const Graph& g, const EdgeSet& t);

/// H = <E(G) - E(T)>; 2-regular, non-separating, on the n/2 + 1 leaves of T.
TwoRegularSubgraph complement_of_hist(const Graph& g, const HistCertificate& cert);

/// Inverse of complement_of_hist.
HistCertificate hist_from_two_regular(const Graph& g, const TwoRegularSubgraph& h);

enum class FilterVerdict { NoHist, Inconclusive };
std::string_view to_string(FilterVerdict v) noexcept;

/// A bipartite cubic graph with a Hist has n = 2 mod 4, since |V(H)| =
/// n/2 + 1 counts the vertices of even cycles.
FilterVerdict mod4_filter(const Graph& g);

enum class SolveMode { Decide, First, Count, EnumerateAll };
enum class Verdict { HasHist, NoHist, BudgetExceeded };
enum class FilterUsed { None, Mod4, Facial };

std::string_view to_string(SolveMode m) noexcept;
std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(FilterUsed f) noexcept;

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

struct SolveOptions {
  SolveMode mode = SolveMode::Decide;
  std::uint64_t nodeBudget = kDefaultNodeBudget;
  bool useMod4Filter = true;
  /// Worker threads; 1 runs the search on the calling thread.
  unsigned workers = 1;
};

struct SolveReport {
  Verdict verdict = Verdict::NoHist;
  /// Decide/First: at most one. EnumerateAll: all, in EdgeSet order.
  std::vector<HistCertificate> certificates;
  /// Exact number of Hists; set by Count and EnumerateAll unless the budget ran out.
  std::optional<std::uint64_t> count;
  std::uint64_t nodesExplored = 0;
  FilterUsed filterUsed = FilterUsed::None;
};

/// Exact Hist search.
///
/// Every edge is either a tree edge or a cycle edge (an edge of the
/// complementary 2-regular subgraph). The search branches on undecided
/// edges and propagates: a vertex ends with exactly 0 or 2 cycle edges,
/// tree edges stay acyclic, tree plus undecided edges must stay connected,
/// and the tree/cycle edge counts may not exceed n - 1 and n/2 + 1.
/// Branching picks the undecided edge touching the vertex with the most
/// decided edges (smallest index on ties) and tries Tree before Cycle.
///
/// Reports are identical for any worker count unless the budget runs out.
SolveReport solve(const Graph& g, const SolveOptions& options = {});

inline constexpr int kOracleVertexCap = 24;

/// Independent enumeration through the complement characterization: every
/// vertex-disjoint union of cycles on exactly n/2 + 1 vertices whose removal
/// leaves g connected yields one Hist. Output sorted like solve().
std::vector<HistCertificate> oracle_enumerate(const Graph& g, int vertexCap = kOracleVertexCap);

/// Certificate file: "hist n" then n - 1 lines "u v".
void write_certificate(std::ostream& out, const Graph& g, const HistCertificate& cert);
/// Reads the tree edges of a certificate file; verify with verify_hist.
EdgeSet read_certificate(std::istream& in, const Graph& g);

}  // namespace histlab::hist
