#include <algorithm>
#include <cmath>
#include <string>

#include "histlab/construct.hpp"
#include "histlab/profile.hpp"

namespace histlab::construct {

topology::RotationSystem rotation_from_coordinates(const Graph& g,
                                                   const std::vector<std::pair<double, double>>& xy) {
  std::vector<std::vector<Vertex>> order(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    order[v].assign(nb.begin(), nb.end());
    auto angle = [&](Vertex w) { return std::atan2(xy[w].second - xy[v].second, xy[w].first - xy[v].first); };
    std::sort(order[v].begin(), order[v].end(), [&](Vertex a, Vertex b) { return angle(a) < angle(b); });
  }
  return topology::RotationSystem::from_neighbor_order(g, order);
}

EmbeddedGraph honeycomb_torus(int m, int n) {
  if (m < 2 || n < 2) {
    throw ConstructError(ConstructErrorKind::ParameterTooSmall,
                         "honeycomb torus needs m >= 2 and n >= 2, got " + std::to_string(m) + "," +
                             std::to_string(n));
  }
  const int cols = 2 * n;
  auto id = [cols](int i, int j) { return i * cols + ((j % cols) + cols) % cols; };
  // Neighbour below a vertex with i+j even, above one with i+j odd.
  auto below = [&](int i, int j) { return i + 1 < m ? id(i + 1, j) : id(0, j + m % 2); };
  auto above = [&](int i, int j) { return i > 0 ? id(i - 1, j) : id(m - 1, j - m % 2); };

  const int count = m * cols;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> order(static_cast<std::size_t>(count));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < cols; ++j) {
      const Vertex v = id(i, j);
      edges.push_back({v, id(i, j + 1)});
      if ((i + j) % 2 == 0) {
        edges.push_back({v, below(i, j)});
        order[v] = {id(i, j + 1), id(i, j - 1), below(i, j)};
      } else {
        order[v] = {id(i, j + 1), above(i, j), id(i, j - 1)};
      }
    }
  }
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw ConstructError(ConstructErrorKind::DegenerateWrap, "wrap edges coincide with interior edges");
  }
  EmbeddedGraph out{Graph(count, std::move(edges)), {}, {"honeycomb_torus", {{"m", m}, {"n", n}}}};
  out.rotation = topology::RotationSystem::from_neighbor_order(out.graph, order);
  return out;
}

namespace {

enum class Side { Left, Right };

/// Side of the third edge at every cycle vertex. Requires a cubic graph and
/// a chordless cycle.
std::vector<Side> third_edge_sides(const std::vector<std::vector<Vertex>>& nb, const std::vector<Vertex>& c,
                                   std::vector<Vertex>* thirds) {
  const std::size_t len = c.size();
  std::vector<Side> sides;
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex v = c[i];
    const Vertex fwd = c[(i + 1) % len];
    const Vertex bwd = c[(i + len - 1) % len];
    const auto& rot = nb[v];
    Vertex third = -1;
    for (Vertex w : rot) {
      if (w != fwd && w != bwd) third = w;
    }
    const auto at = std::find(rot.begin(), rot.end(), fwd) - rot.begin();
    sides.push_back(rot[(at + 1) % rot.size()] == third ? Side::Left : Side::Right);
    if (thirds) thirds->push_back(third);
  }
  return sides;
}

bool alternating(const std::vector<Side>& sides) {
  for (std::size_t i = 0; i < sides.size(); ++i) {
    if (sides[i] == sides[(i + 1) % sides.size()]) return false;
  }
  return true;
}

void check_chordless_six_cycle(const Graph& g, const std::vector<Vertex>& c) {
  if (c.size() != 6) {
    throw ConstructError(ConstructErrorKind::NotChordlessSixCycle,
                         "cycle has " + std::to_string(c.size()) + " vertices, need 6");
  }
  for (std::size_t i = 0; i < 6; ++i) {
    if (c[i] < 0 || c[i] >= g.vertex_count()) {
      throw ConstructError(ConstructErrorKind::NotChordlessSixCycle, "vertex " + std::to_string(c[i]) + " out of range");
    }
    for (std::size_t j = i + 1; j < 6; ++j) {
      if (c[i] == c[j]) throw ConstructError(ConstructErrorKind::NotChordlessSixCycle, "cycle repeats a vertex");
      const bool consecutive = j == i + 1 || (i == 0 && j == 5);
      if (g.adjacent(c[i], c[j]) != consecutive) {
        throw ConstructError(ConstructErrorKind::NotChordlessSixCycle,
                             std::string(consecutive ? "missing edge " : "chord ") + std::to_string(c[i]) +
                                 "-" + std::to_string(c[j]));
      }
    }
  }
}

void require_cubic_hexangulation(const EmbeddedGraph& g) {
  if (!is_cubic(g.graph) || !topology::is_hexangulation(g.graph, g.rotation).isHexangulation) {
    throw ConstructError(ConstructErrorKind::NotCubicHexangulation, "input is not a cubic hexangulation");
  }
}

}  // namespace

EmbeddedGraph insert_ring(const EmbeddedGraph& g, const std::vector<Vertex>& c) {
  require_cubic_hexangulation(g);
  check_chordless_six_cycle(g.graph, c);
  auto nb = g.rotation.neighbor_order(g.graph);
  std::vector<Vertex> thirds;
  const auto sides = third_edge_sides(nb, c, &thirds);
  if (!alternating(sides)) {
    throw ConstructError(ConstructErrorKind::CutNotWellDefined,
                         "third edges do not alternate between the two sides of the cycle");
  }

  const int n = g.graph.vertex_count();
  auto w = [n](int i) { return n + (i % 6 + 6) % 6; };
  auto u = [n](int i) { return n + 6 + (i % 6 + 6) % 6; };
  auto v = [&c](int i) { return c[static_cast<std::size_t>((i % 6 + 6) % 6)]; };
  nb.resize(static_cast<std::size_t>(n + 12));
  for (int i = 0; i < 6; ++i) {
    if (sides[i] == Side::Left) {
      nb[v(i)] = {v(i + 1), thirds[i], v(i - 1)};
      nb[w(i)] = {w(i + 1), u(i), w(i - 1)};
      nb[u(i)] = {u(i + 1), u(i - 1), w(i)};
    } else {
      nb[v(i)] = {v(i + 1), v(i - 1), u(i)};
      nb[w(i)] = {w(i + 1), w(i - 1), thirds[i]};
      nb[u(i)] = {u(i + 1), v(i), u(i - 1)};
      auto& rot = nb[thirds[i]];
      std::replace(rot.begin(), rot.end(), v(i), w(i));
    }
  }

  std::vector<Edge> edges;
  for (Vertex a = 0; a < n + 12; ++a) {
    for (Vertex b : nb[a]) {
      if (a < b) edges.push_back({a, b});
    }
  }
  EmbeddedGraph out;
  try {
    out.graph = Graph(n + 12, std::move(edges));
    out.rotation = topology::RotationSystem::from_neighbor_order(out.graph, nb);
  } catch (const Error& err) {
    throw ConstructError(ConstructErrorKind::ResultNotHexangulation,
                         std::string("ring insertion produced an invalid embedding: ") + err.what());
  }
  const auto before = topology::is_hexangulation(g.graph, g.rotation);
  const auto after = topology::is_hexangulation(out.graph, out.rotation);
  if (!is_cubic(out.graph) || !after.isHexangulation || after.genus != before.genus) {
    throw ConstructError(ConstructErrorKind::ResultNotHexangulation,
                         "ring insertion did not yield a cubic hexangulation of the same genus");
  }
  out.provenance.generator = "insert_ring";
  out.provenance.params["base"] = g.provenance.generator;
  out.provenance.params["base_vertices"] = static_cast<long long>(n);
  out.provenance.params["cycle"] = std::vector<long long>(c.begin(), c.end());
  return out;
}

std::vector<std::vector<Vertex>> ring_cycles(const EmbeddedGraph& g) {
  const Graph& graph = g.graph;
  if (!is_cubic(graph)) return {};
  const auto nb = g.rotation.neighbor_order(graph);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  auto extend = [&](auto&& self, Vertex s) -> void {
    const Vertex tail = path.back();
    for (Vertex x : graph.neighbors(tail)) {
      if (path.size() == 6) {
        if (x != s || path[1] > path[5]) continue;
        bool chordless = true;
        for (std::size_t i = 0; i < 6 && chordless; ++i) {
          for (std::size_t j = i + 2; j < 6; ++j) {
            if (!(i == 0 && j == 5) && graph.adjacent(path[i], path[j])) {
              chordless = false;
              break;
            }
          }
        }
        if (chordless && alternating(third_edge_sides(nb, path, nullptr))) out.push_back(path);
        continue;
      }
      if (x <= s || std::find(path.begin(), path.end(), x) != path.end()) continue;
      path.push_back(x);
      self(self, s);
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < graph.vertex_count(); ++s) {
    path = {s};
    extend(extend, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace histlab::construct
