#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "histlab/error.hpp"
#include "histlab/graph.hpp"
#include "histlab/hist.hpp"

/// Orientable embeddings given by rotation systems.
///
/// Face tracing convention: the arc (u,v) is followed by the arc (v,w) where
/// the edge vw is the cyclic successor of the edge vu in the rotation at v.
/// Worked example, K4 with rotations
///   0: 01 02 03   1: 10 13 12   2: 20 21 23   3: 30 32 31
/// (listing each edge by its endpoints): starting from 0->1, the successor of
/// 10 at vertex 1 is 13, so the walk continues 1->3; at 3 the successor of 31
/// is 30, giving 3->0; at 0 the successor of 03 is 01, which closes the
/// triangular face 0,1,3. All four faces come out as triangles, so
/// V - E + F = 4 - 6 + 4 = 2 and the genus is 0.
namespace histlab::topology {

enum class TopologyErrorKind {
  InvalidRotation,
  OddEulerDefect,
  NotPlanarEmbedding,
  NotCubic,
  Disconnected,
  KOutOfRange,
};

std::string_view to_string(TopologyErrorKind kind) noexcept;
using TopologyError = KindedError<TopologyErrorKind>;

/// Cyclic order of incident edge indices around every vertex.
struct RotationSystem {
  std::vector<std::vector<int>> order;

  /// Throws TopologyError(InvalidRotation) unless every list is a
  /// permutation of the vertex's incident edges.
  void validate(const Graph& g) const;

  /// From cyclic neighbour orders (simple graphs only).
  static RotationSystem from_neighbor_order(const Graph& g,
                                            const std::vector<std::vector<Vertex>>& neighbors);
  [[nodiscard]] std::vector<std::vector<Vertex>> neighbor_order(const Graph& g) const;

  bool operator==(const RotationSystem&) const = default;
};

/// One face as a closed walk: vertices[i] -> vertices[i+1 mod len] along edges[i].
struct Face {
  std::vector<Vertex> vertices;
  std::vector<int> edges;

  [[nodiscard]] int length() const noexcept { return static_cast<int>(edges.size()); }
  /// True when the walk visits no vertex twice.
  [[nodiscard]] bool is_cycle() const;
};

struct FaceSet {
  std::vector<Face> faces;
  std::map<int, int> lengthHistogram;
};

FaceSet trace_faces(const Graph& g, const RotationSystem& rot);

/// Orientable genus from V - E + F = 2 - 2 genus.
int euler_genus(const Graph& g, const RotationSystem& rot);

struct FullereneReport {
  bool isFullerene = false;
  int genus = 0;
  int pentagons = 0;
  int hexagons = 0;
  int otherFaces = 0;
  bool cubic = false;
  bool threeConnected = false;
};

FullereneReport is_fullerene(const Graph& g, const RotationSystem& rot);

struct HexangulationReport {
  bool isHexangulation = false;
  int genus = 0;
  int faceCount = 0;
  bool twoConnected = false;
};

HexangulationReport is_hexangulation(const Graph& g, const RotationSystem& rot);

/// Brute force: no set of k-1 vertices disconnects g. Requires 1 <= k <= 3.
bool vertex_connectivity_at_least(const Graph& g, int k);

/// NoHist when no multiset of facial cycle lengths sums to n/2 + 1.
/// Requires a connected cubic graph embedded with genus 0.
hist::FilterVerdict facial_filter(const Graph& g, const RotationSystem& rot);

struct PlanarSolveOptions {
  hist::SolveMode mode = hist::SolveMode::Decide;
  std::uint64_t nodeBudget = hist::kDefaultNodeBudget;
};

/// Hist search restricted to vertex-disjoint sets of facial cycles covering
/// exactly n/2 + 1 vertices (in a plane cubic graph every non-facial cycle
/// separates). Faces are considered in trace order; a branch is cut as soon
/// as the remaining faces cannot reach the target vertex count by length
/// alone. Certificates match hist::solve exactly.
hist::SolveReport planar_hist_solve(const Graph& g, const RotationSystem& rot,
                                    const PlanarSolveOptions& options = {});

/// Embedding file: an edge-list block, a line "rotations", then one line
/// "v: e1 e2 ..." per vertex listing edge indices (edge-list order) cyclically.
struct Embedding {
  Graph graph;
  RotationSystem rotation;
};

Embedding read_embedding(std::istream& in);
void write_embedding(std::ostream& out, const Graph& g, const RotationSystem& rot);

}  // namespace histlab::topology
