#include "histlab/profile.hpp"

#include <algorithm>
#include <queue>

namespace histlab {

bool is_cubic(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return g.vertex_count() > 0;
}

std::vector<int> component_labels(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[w] == -1) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

int component_count(const Graph& g) {
  auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(v)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          queue.push(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.vertex_count();
  std::optional<int> best;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parentEdge(static_cast<std::size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<Vertex> queue;
    dist[root] = 0;
    parentEdge[root] = -1;
    queue.push(root);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      if (best && 2 * dist[v] >= *best) break;
      auto nb = g.neighbors(v);
      auto inc = g.incident_edges(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        Vertex w = nb[i];
        if (inc[i] == parentEdge[v]) continue;
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          parentEdge[w] = inc[i];
          queue.push(w);
        } else {
          int len = dist[v] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

GraphProfile classify(const Graph& g) {
  GraphProfile p;
  p.n = g.vertex_count();
  p.m = g.edge_count();
  p.isCubic = is_cubic(g);
  p.isConnected = is_connected(g);
  p.bipartition = bipartition(g);
  p.isBipartite = p.bipartition.has_value();
  p.girth = girth(g);
  return p;
}

}  // namespace histlab
