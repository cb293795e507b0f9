#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "histlab/hist.hpp"
#include "histlab/profile.hpp"
#include "histlab/union_find.hpp"

namespace histlab::hist {
namespace {

struct Cycle {
  std::uint64_t vertices = 0;
  std::vector<int> edges;
  int length = 0;
};

/// All simple cycles, grouped by their smallest vertex. Each cycle is kept in
/// the direction whose second vertex is smaller than its last.
std::vector<std::vector<Cycle>> cycles_by_min_vertex(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<Cycle>> out(static_cast<std::size_t>(n));
  std::vector<Vertex> path;
  std::vector<int> pathEdges;
  std::uint64_t onPath = 0;

  // Recursive lambda over the current simple path starting at s.
  auto extend = [&](auto&& self, Vertex s) -> void {
    const Vertex tail = path.back();
    auto nb = g.neighbors(tail);
    auto inc = g.incident_edges(tail);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex w = nb[i];
      if (w == s && path.size() >= 3 && path[1] < tail) {
        Cycle c;
        c.vertices = onPath;
        c.edges = pathEdges;
        c.edges.push_back(inc[i]);
        c.length = static_cast<int>(path.size());
        out[s].push_back(std::move(c));
        continue;
      }
      if (w <= s || ((onPath >> w) & 1U)) continue;
      path.push_back(w);
      pathEdges.push_back(inc[i]);
      onPath |= std::uint64_t{1} << w;
      self(self, s);
      onPath &= ~(std::uint64_t{1} << w);
      pathEdges.pop_back();
      path.pop_back();
    }
  };

  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    pathEdges.clear();
    onPath = std::uint64_t{1} << s;
    extend(extend, s);
  }
  return out;
}

}  // namespace

std::vector<HistCertificate> oracle_enumerate(const Graph& g, int vertexCap) {
  if (!is_cubic(g)) throw HistError(HistErrorKind::NotCubic, "graph is not cubic");
  if (!is_connected(g)) throw HistError(HistErrorKind::Disconnected, "graph is not connected");
  const int n = g.vertex_count();
  if (n > vertexCap || n > 64) {
    throw HistError(HistErrorKind::InstanceTooLarge,
                    "oracle is limited to " + std::to_string(std::min(vertexCap, 64)) +
                        " vertices, graph has " + std::to_string(n));
  }

  const auto byMin = cycles_by_min_vertex(g);
  const int target = n / 2 + 1;
  std::vector<HistCertificate> out;
  std::vector<const Cycle*> chosen;

  auto evaluate = [&] {
    EdgeSet removed(g);
    for (const Cycle* c : chosen) {
      for (int e : c->edges) removed.insert(e);
    }
    const EdgeSet tree = removed.complement();
    UnionFind uf(n);
    for (int e : tree.indices()) uf.unite(g.edge(e).u, g.edge(e).v);
    if (uf.set_count() == 1) out.push_back(verify_hist(g, tree));
  };

  auto pick = [&](auto&& self, Vertex v, std::uint64_t used, int remaining) -> void {
    if (remaining == 0) {
      evaluate();
      return;
    }
    if (v == n) return;
    self(self, v + 1, used, remaining);
    for (const Cycle& c : byMin[v]) {
      if ((c.vertices & used) != 0 || c.length > remaining) continue;
      chosen.push_back(&c);
      self(self, v + 1, used | c.vertices, remaining - c.length);
      chosen.pop_back();
    }
  };
  pick(pick, 0, 0, target);

  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace histlab::hist
