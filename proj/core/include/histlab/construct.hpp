#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "histlab/error.hpp"
#include "histlab/graph.hpp"
#include "histlab/hist.hpp"
#include "histlab/topology.hpp"

/// Generators: inflations, Eulerian orientations, bipartite inflations,
/// random regular graphs, honeycomb tori, ring insertion and named graphs.
namespace histlab::construct {

enum class ConstructErrorKind {
  MinDegreeTooLow,
  NotSimple,
  Disconnected,
  OddDegreeVertex,
  NotRegularEven,
  KTooSmall,
  ParityViolation,
  InvalidParameter,
  RejectionLimitExceeded,
  ParameterTooSmall,
  DegenerateWrap,
  NotCubicHexangulation,
  NotChordlessSixCycle,
  CutNotWellDefined,
  ResultNotHexangulation,
  UnknownName,
  MissingDataFile,
};

std::string_view to_string(ConstructErrorKind kind) noexcept;
using ConstructError = KindedError<ConstructErrorKind>;

/// Graph with minimum degree at least 3.
struct BaseGraph {
  Graph graph;
  std::vector<int> degrees;

  /// Throws ConstructError(MinDegreeTooLow) when some degree is below 3.
  static BaseGraph from(Graph g);
  /// As above from raw pairs; loops and repeated pairs give NotSimple.
  static BaseGraph from_edges(int n, std::vector<Edge> edges);
};

/// Direction per edge of a host graph.
struct Orientation {
  /// lowToHigh[e] is true when edge e = (u,v), u < v, points from u to v.
  std::vector<bool> lowToHigh;
  std::vector<int> indegree;
  std::vector<int> outdegree;

  static Orientation from_directions(const Graph& g, std::vector<bool> lowToHigh);
  [[nodiscard]] Vertex tail(const Graph& g, int e) const;
  [[nodiscard]] Vertex head(const Graph& g, int e) const;
  [[nodiscard]] Orientation reversed() const;
};

struct InflatedVertex {
  Vertex base = 0;   // x
  int position = 0;  // index on C_x
};

struct InflationResult {
  Graph inflated;
  /// The 2-factor formed by the cycles C_x, one per base vertex.
  hist::TwoRegularSubgraph factor;
  /// Inflated vertex -> (x, position on C_x). Vertices of C_x are numbered
  /// consecutively in base-vertex order.
  std::vector<InflatedVertex> vertexMap;
  /// Colour per vertex (0: outdegree 3, 1: indegree 3); bipartite inflations only.
  std::optional<std::vector<int>> coloring;
  /// The orientation witnessing the colouring; bipartite inflations only.
  std::optional<Orientation> orientation;
};

/// Cyclic order of the edges around each C_x: ascending neighbour index, or
/// shuffled per base vertex from a seed.
struct RotationChoice {
  std::optional<std::uint64_t> seed;

  static RotationChoice deterministic() { return {}; }
  static RotationChoice seeded(std::uint64_t s) { return {s}; }
};

InflationResult inflate(const BaseGraph& h, RotationChoice choice = RotationChoice::deterministic());

/// Base graph recovered by contracting each factor cycle through vertexMap.
Graph contract_factor(const InflationResult& r);

/// Hierholzer traversal per component; each edge points along the walk.
/// Throws ConstructError(OddDegreeVertex) naming the first odd vertex.
Orientation eulerian_orientation(const Graph& h);

/// Bipartite cubic inflation of a connected 2k-regular graph.
///
/// With an Eulerian orientation fixed, the 2k arcs at x are placed around
/// C_x as in_0, out_0, in_1, out_1, ... (each list sorted by edge index).
/// Even positions receive an incoming arc, odd positions an outgoing one.
/// Cycle edges point from odd to even positions, so odd positions end with
/// outdegree 3 and even positions with indegree 3, and every edge runs from
/// the first kind to the second.
InflationResult bipartite_inflate(const BaseGraph& h, int k);

inline constexpr int kRandomRegularRetryCap = 10'000;

/// Pairing model with full resampling on loops or repeated pairs. Dense
/// requests (d > (n-1)/2) sample the complement, which has the same law.
Graph random_regular(int n, int d, std::uint64_t seed);

using ParamValue = std::variant<long long, std::vector<long long>, std::string>;

struct Provenance {
  std::string generator;
  std::map<std::string, ParamValue> params;

  bool operator==(const Provenance&) const = default;
};

struct EmbeddedGraph {
  Graph graph;
  topology::RotationSystem rotation;
  Provenance provenance;
};

/// Brick-wall torus: vertices (i,j), i < m, j < 2n, numbered i*2n + j.
/// Rows are cycles; (i,j) joins (i+1,j) when i+j is even and i < m-1. The
/// bottom row wraps to the top with a shift of m mod 2 columns, which keeps
/// the graph cubic and bipartite for odd m. Yields mn hexagonal faces.
EmbeddedGraph honeycomb_torus(int m, int n);

/// Cuts a cubic hexangulation along the chordless 6-cycle c and glues in a
/// 12-vertex hexagonal ring.
///
/// Each v_i on c has a third edge on one side of c; the sides must alternate
/// around c. The original v_i keep the third edges on the left and a fresh
/// copy w_i takes those on the right. A new 6-cycle u_0..u_5 sits between the
/// two copies, with u_i joined to w_i where the third edge of v_i is on the
/// left and to v_i otherwise. New vertices are numbered n + i for w_i and
/// n + 6 + i for u_i, so the u-cycle is again a valid ring cycle.
EmbeddedGraph insert_ring(const EmbeddedGraph& g, const std::vector<Vertex>& c);

/// Chordless 6-cycles along which insert_ring can cut, canonically rotated
/// (smallest vertex first, smaller neighbour second), in lexicographic order.
std::vector<std::vector<Vertex>> ring_cycles(const EmbeddedGraph& g);

/// Rotation from a straight-line drawing: neighbours sorted counterclockwise.
topology::RotationSystem rotation_from_coordinates(const Graph& g,
                                                   const std::vector<std::pair<double, double>>& xy);

struct CatalogGraph {
  Graph graph;
  std::optional<topology::RotationSystem> rotation;
  Provenance provenance;

  [[nodiscard]] std::optional<EmbeddedGraph> embedded() const;
};

/// Cubic names: k4, k33, cube, petersen, dodecahedron, heawood,
/// moebius_kantor, pappus, desargues, prism(k) with k >= 3, and the data
/// files buckminster, grinberg. Base graphs for inflations: complete(n) (also
/// k5, k7), octahedron, cycle(n).
CatalogGraph catalog(std::string_view name);

/// The built-in cubic graphs, excluding data-file entries.
std::vector<std::string> cubic_catalog_names();

/// HISTLAB_DATA_DIR when set, else the directory compiled into the library.
std::string data_directory();

}  // namespace histlab::construct
