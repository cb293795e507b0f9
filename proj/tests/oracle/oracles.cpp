#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle {

namespace {

/// Calls f on every k-subset of {0..m-1}, in lexicographic order.
void for_each_subset(int m, int k, const std::function<void(const std::vector<int>&)>& f) {
  if (k > m || k < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

bool is_spanning_tree(const Graph& g, const std::vector<int>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  for (int e : edges) {
    const int a = find(parent, g.edge(e).u);
    const int b = find(parent, g.edge(e).v);
    if (a == b) return false;
    parent[a] = b;
  }
  return static_cast<int>(edges.size()) == g.vertex_count() - 1;
}

}  // namespace

std::vector<std::vector<int>> spanning_trees(const Graph& g) {
  std::vector<std::vector<int>> out;
  for_each_subset(g.edge_count(), g.vertex_count() - 1, [&](const std::vector<int>& s) {
    if (is_spanning_tree(g, s)) out.push_back(s);
  });
  return out;
}

std::vector<std::vector<int>> hists(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (auto& t : spanning_trees(g)) {
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int e : t) {
      ++deg[g.edge(e).u];
      ++deg[g.edge(e).v];
    }
    if (std::find(deg.begin(), deg.end(), 2) == deg.end()) out.push_back(std::move(t));
  }
  return out;
}

bool has_odd_cycle(const Graph& g) {
  const int n = g.vertex_count();
  for (Vertex s = 0; s < n; ++s) {
    std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
    std::vector<int> stack{2 * s};
    seen[2 * s] = 1;
    while (!stack.empty()) {
      const int state = stack.back();
      stack.pop_back();
      const Vertex v = state / 2;
      const int parity = state % 2;
      for (Vertex w : g.neighbors(v)) {
        const int next = 2 * w + (1 - parity);
        if (!seen[next]) {
          seen[next] = 1;
          stack.push_back(next);
        }
      }
    }
    if (seen[2 * s + 1]) return true;
  }
  return false;
}

std::vector<std::vector<Vertex>> simple_cycles(const Graph& g, int maxLen) {
  std::vector<std::vector<Vertex>> out;
  const int n = g.vertex_count();
  std::vector<Vertex> path;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<void(Vertex)> dfs = [&](Vertex s) {
    const Vertex tail = path.back();
    for (Vertex w : g.neighbors(tail)) {
      if (w == s && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      if (w <= s || used[w] || static_cast<int>(path.size()) >= maxLen) continue;
      used[w] = 1;
      path.push_back(w);
      dfs(s);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    used[s] = 1;
    dfs(s);
    used[s] = 0;
  }
  return out;
}

bool chordless(const Graph& g, const std::vector<Vertex>& c) {
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (g.adjacent(c[i], c[j])) return false;
    }
  }
  return true;
}

std::vector<int> components(const Graph& g, const std::vector<char>& removedVertex,
                            const std::vector<char>& removedEdge) {
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != -1 || (!removedVertex.empty() && removedVertex[s])) continue;
    std::vector<Vertex> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (int e : g.incident_edges(v)) {
        if (!removedEdge.empty() && removedEdge[e]) continue;
        const Vertex w = g.other(e, v);
        if ((!removedVertex.empty() && removedVertex[w]) || label[w] != -1) continue;
        label[w] = next;
        stack.push_back(w);
      }
    }
    ++next;
  }
  return label;
}

namespace {

/// Per component of g minus `cut`: (vertex count, edge count).
std::vector<std::pair<int, int>> component_sizes(const Graph& g, const std::vector<char>& cut,
                                                 std::vector<int>& label) {
  label = components(g, {}, cut);
  const int k = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::pair<int, int>> sizes(static_cast<std::size_t>(k), {0, 0});
  for (int v : label) ++sizes[v].first;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!cut[e]) ++sizes[label[g.edge(e).u]].second;
  }
  return sizes;
}

}  // namespace

std::optional<int> cyclic_cut_size(const Graph& g, int maxSize) {
  std::vector<char> cut(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<int> label;
  for (int k = 1; k <= maxSize; ++k) {
    bool found = false;
    for_each_subset(g.edge_count(), k, [&](const std::vector<int>& s) {
      if (found) return;
      for (int e : s) cut[e] = 1;
      int cyclic = 0;
      for (auto [nv, ne] : component_sizes(g, cut, label)) cyclic += ne >= nv ? 1 : 0;
      found = cyclic >= 2;
      for (int e : s) cut[e] = 0;
    });
    if (found) return k;
  }
  return std::nullopt;
}

bool separates_cycles(const Graph& g, const std::vector<int>& cutEdges, const std::vector<Vertex>& a,
                      const std::vector<Vertex>& b) {
  std::vector<char> cut(static_cast<std::size_t>(g.edge_count()), 0);
  for (int e : cutEdges) cut[e] = 1;
  std::vector<int> label;
  const auto sizes = component_sizes(g, cut, label);
  const int la = label[a.front()];
  const int lb = label[b.front()];
  if (la == lb) return false;
  for (Vertex v : a) {
    if (label[v] != la) return false;
  }
  for (Vertex v : b) {
    if (label[v] != lb) return false;
  }
  return sizes[la].second >= sizes[la].first && sizes[lb].second >= sizes[lb].first;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  for (int k = 0; k < n - 1; ++k) {
    bool found = false;
    for_each_subset(n, k, [&](const std::vector<int>& s) {
      if (found) return;
      std::vector<char> removed(static_cast<std::size_t>(n), 0);
      for (int v : s) removed[v] = 1;
      const auto label = components(g, removed, {});
      found = *std::max_element(label.begin(), label.end()) >= 1;
    });
    if (found) return k;
  }
  return std::max(0, n - 1);
}

}  // namespace oracle
