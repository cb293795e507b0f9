#include "histlab/cyclic.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

#include "histlab/profile.hpp"

namespace histlab::cyclic {

std::string_view to_string(CyclicErrorKind kind) noexcept {
  switch (kind) {
    case CyclicErrorKind::NotCubic: return "NotCubic";
    case CyclicErrorKind::Disconnected: return "Disconnected";
    case CyclicErrorKind::OverlappingTerminals: return "OverlappingTerminals";
    case CyclicErrorKind::EmptyTerminals: return "EmptyTerminals";
    case CyclicErrorKind::NotAnInflation: return "NotAnInflation";
  }
  return "Unknown";
}

std::string_view to_string(CutKind kind) noexcept {
  return kind == CutKind::Finite ? "Finite" : "Undefined";
}

std::string_view to_string(TheoremStatus s) noexcept {
  switch (s) {
    case TheoremStatus::Pass: return "Pass";
    case TheoremStatus::Violation: return "Violation";
    case TheoremStatus::PremiseNotMet: return "PremiseNotMet";
  }
  return "Unknown";
}

namespace {

/// Directed residual network with augmenting-path BFS (Edmonds-Karp).
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : out_(static_cast<std::size_t>(nodes)) {}

  /// Adds a <-> b with capacity `forward` one way and `backward` the other.
  int add(int a, int b, int forward, int backward) {
    const int id = static_cast<int>(to_.size());
    to_.push_back(b);
    cap_.push_back(forward);
    out_[a].push_back(id);
    to_.push_back(a);
    cap_.push_back(backward);
    out_[b].push_back(id + 1);
    return id;
  }

  int run(int s, int t, int limit) {
    int flow = 0;
    std::vector<int> via(out_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> queue{s};
      via[s] = -2;
      while (!queue.empty() && via[t] == -1) {
        const int x = queue.front();
        queue.pop_front();
        for (int arc : out_[x]) {
          const int y = to_[arc];
          if (cap_[arc] > 0 && via[y] == -1) {
            via[y] = arc;
            queue.push_back(y);
          }
        }
      }
      if (via[t] == -1) break;
      for (int y = t; y != s; y = to_[via[y] ^ 1]) {
        --cap_[via[y]];
        ++cap_[via[y] ^ 1];
      }
      ++flow;
    }
    return flow;
  }

  /// Nodes reachable from s in the residual network.
  std::vector<char> reachable(int s) const {
    std::vector<char> seen(out_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int arc : out_[x]) {
        if (cap_[arc] > 0 && !seen[to_[arc]]) {
          seen[to_[arc]] = 1;
          stack.push_back(to_[arc]);
        }
      }
    }
    return seen;
  }

 private:
  std::vector<std::vector<int>> out_;
  std::vector<int> to_;
  std::vector<int> cap_;
};

constexpr int kInfinite = std::numeric_limits<int>::max() / 4;

void require_connected_cubic(const Graph& g) {
  if (!is_cubic(g)) throw CyclicError(CyclicErrorKind::NotCubic, "graph is not cubic");
  if (!is_connected(g)) throw CyclicError(CyclicErrorKind::Disconnected, "graph is not connected");
}

bool disjoint(const std::vector<Vertex>& a, const std::vector<char>& marked) {
  return std::none_of(a.begin(), a.end(), [&](Vertex v) { return marked[v] != 0; });
}

}  // namespace

std::vector<std::vector<Vertex>> induced_cycles(const Graph& g, int maxLen) {
  const int n = g.vertex_count();
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::vector<char> onPath(static_cast<std::size_t>(n), 0);

  // path stays an induced path above its start s; it closes into a chordless
  // cycle as soon as the tail touches s again.
  auto extend = [&](auto&& self, Vertex s) -> void {
    const Vertex tail = path.back();
    if (path.size() >= 3 && g.adjacent(tail, s)) {
      if (path[1] < tail) out.push_back(path);
      return;
    }
    if (static_cast<int>(path.size()) >= maxLen) return;
    for (Vertex w : g.neighbors(tail)) {
      if (w <= s || onPath[w]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i) chord = g.adjacent(w, path[i]);
      if (chord) continue;
      path.push_back(w);
      onPath[w] = 1;
      self(self, s);
      onPath[w] = 0;
      path.pop_back();
    }
  };

  if (maxLen < 3) return out;
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    onPath[s] = 1;
    extend(extend, s);
    onPath[s] = 0;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

FlowResult max_flow_unit(const Graph& g, const std::vector<Vertex>& sources, const std::vector<Vertex>& sinks,
                         std::optional<int> limit) {
  if (sources.empty() || sinks.empty()) {
    throw CyclicError(CyclicErrorKind::EmptyTerminals, "terminal sets must be non-empty");
  }
  const int n = g.vertex_count();
  std::vector<char> role(static_cast<std::size_t>(n), 0);
  for (Vertex v : sources) {
    if (v < 0 || v >= n) throw GraphError(GraphErrorKind::VertexOutOfRange, "terminal out of range");
    role[v] = 1;
  }
  for (Vertex v : sinks) {
    if (v < 0 || v >= n) throw GraphError(GraphErrorKind::VertexOutOfRange, "terminal out of range");
    if (role[v] == 1) {
      throw CyclicError(CyclicErrorKind::OverlappingTerminals,
                        "vertex " + std::to_string(v) + " is both source and sink");
    }
    role[v] = 2;
  }
  const int s = n;
  const int t = n + 1;
  FlowNetwork net(n + 2);
  for (const auto& e : g.edges()) net.add(e.u, e.v, 1, 1);
  for (Vertex v = 0; v < n; ++v) {
    if (role[v] == 1) net.add(s, v, kInfinite, 0);
    if (role[v] == 2) net.add(v, t, kInfinite, 0);
  }

  FlowResult r;
  const int cap = limit.value_or(kInfinite);
  r.value = net.run(s, t, cap);
  r.complete = r.value < cap;
  if (!r.complete) return r;

  const auto side = net.reachable(s);
  r.cut = EdgeSet(g);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (side[g.edge(e).u] != side[g.edge(e).v]) r.cut.insert(e);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (side[v]) r.sourceSide.push_back(v);
  }
  if (r.cut.size() != r.value) {
    throw std::logic_error("max-flow/min-cut mismatch: flow " + std::to_string(r.value) + ", cut " +
                           std::to_string(r.cut.size()));
  }
  return r;
}

CutReport cyclic_edge_connectivity(const Graph& g, const CecOptions& options) {
  require_connected_cubic(g);
  const int n = g.vertex_count();
  CutReport report;
  const int maxLen = options.maxCycleLength.value_or(n);
  report.capped = maxLen < n;
  const auto cycles = induced_cycles(g, maxLen);

  int best = kInfinite;
  std::vector<char> marked(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (Vertex v : cycles[i]) marked[v] = 1;
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (!disjoint(cycles[j], marked)) continue;
      auto flow = max_flow_unit(g, cycles[i], cycles[j], best);
      if (!flow.complete) continue;
      best = flow.value;
      report.kind = CutKind::Finite;
      report.value = flow.value;
      report.witnessCut = std::move(flow.cut);
      report.witnessCycles = {cycles[i], cycles[j]};
    }
    for (Vertex v : cycles[i]) marked[v] = 0;
  }
  return report;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1 || !is_connected(g)) return 0;
  int best = n - 1;
  // Split v into v_in = v and v_out = n + v joined by a unit arc.
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      FlowNetwork net(2 * n);
      for (Vertex v = 0; v < n; ++v) net.add(v, n + v, v == a || v == b ? kInfinite : 1, 0);
      for (const auto& e : g.edges()) {
        net.add(n + e.u, e.v, 1, 0);
        net.add(n + e.v, e.u, 1, 0);
      }
      best = std::min(best, net.run(n + a, b, best));
    }
  }
  return best;
}

InflationTheoremReport check_inflation_theorem(const construct::BaseGraph& h, const construct::InflationResult& r) {
  if (construct::contract_factor(r) != h.graph) {
    throw CyclicError(CyclicErrorKind::NotAnInflation, "contracting the factor does not give the base graph");
  }
  InflationTheoremReport report;
  report.baseConnectivity = vertex_connectivity(h.graph);
  report.baseGirth = girth(h.graph);
  report.kStar = report.baseGirth ? std::min(report.baseConnectivity, *report.baseGirth) : report.baseConnectivity;
  report.cec = cyclic_edge_connectivity(r.inflated);
  if (report.kStar < 3) {
    report.status = TheoremStatus::PremiseNotMet;
  } else if (report.cec.kind == CutKind::Finite && report.cec.value >= report.kStar) {
    report.status = TheoremStatus::Pass;
  } else {
    report.status = TheoremStatus::Violation;
  }
  return report;
}

}  // namespace histlab::cyclic
