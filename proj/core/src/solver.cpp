#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <limits>
#include <thread>

#include "histlab/hist.hpp"
#include "histlab/profile.hpp"
#include "histlab/union_find.hpp"

namespace histlab::hist {
namespace {

enum EdgeState : std::uint8_t { kUndecided = 0, kTree = 1, kCycle = 2 };

struct Instance {
  explicit Instance(const Graph& graph) : g(graph), n(graph.vertex_count()), m(graph.edge_count()) {
    incident.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      auto inc = g.incident_edges(v);
      std::copy(inc.begin(), inc.end(), incident[v].begin());
    }
    leafTarget = n / 2 + 1;
    branchTarget = n / 2 - 1;
  }

  const Graph& g;
  int n;
  int m;
  std::vector<std::array<int, 3>> incident;
  int leafTarget;
  int branchTarget;
};

struct State {
  explicit State(const Instance& inst)
      : edge(static_cast<std::size_t>(inst.m), kUndecided),
        treeDeg(static_cast<std::size_t>(inst.n), 0),
        cycleDeg(static_cast<std::size_t>(inst.n), 0),
        forest(inst.n),
        undecided(inst.m) {}

  std::vector<std::uint8_t> edge;
  std::vector<std::uint8_t> treeDeg;
  std::vector<std::uint8_t> cycleDeg;
  UnionFind forest;
  int cycleEdges = 0;
  int undecided = 0;
};

class Propagator {
 public:
  explicit Propagator(const Instance& inst) : inst_(inst) {}

  bool assign(State& s, int e, EdgeState value) {
    if (s.edge[e] == value) return true;
    if (s.edge[e] != kUndecided) return false;
    const auto& ed = inst_.g.edge(e);
    if (value == kTree) {
      if (!s.forest.unite(ed.u, ed.v)) return false;
      ++s.treeDeg[ed.u];
      ++s.treeDeg[ed.v];
    } else {
      if (++s.cycleDeg[ed.u] > 2 || ++s.cycleDeg[ed.v] > 2) return false;
      if (++s.cycleEdges > inst_.leafTarget) return false;
    }
    s.edge[e] = value;
    --s.undecided;
    queue_.push_back(ed.u);
    queue_.push_back(ed.v);
    return true;
  }

  /// Runs every rule to a fixpoint; false on contradiction.
  bool propagate(State& s) {
    while (true) {
      while (!queue_.empty()) {
        Vertex x = queue_.back();
        queue_.pop_back();
        if (!propagate_vertex(s, x)) return fail();
      }
      bool changed = false;
      for (int e = 0; e < inst_.m; ++e) {
        if (s.edge[e] != kUndecided) continue;
        const auto& ed = inst_.g.edge(e);
        if (s.forest.same(ed.u, ed.v)) {
          if (!assign(s, e, kCycle)) return fail();
          changed = true;
        }
      }
      if (!changed && queue_.empty()) break;
    }
    return feasible(s);
  }

  /// assign followed by propagate; leaves the queue empty either way.
  bool apply(State& s, int e, EdgeState value) {
    if (!assign(s, e, value)) return fail();
    return propagate(s);
  }

  void queue_all() {
    for (Vertex v = 0; v < inst_.n; ++v) queue_.push_back(v);
  }

 private:
  bool fail() {
    queue_.clear();
    return false;
  }

  bool propagate_vertex(State& s, Vertex x) {
    const int tree = s.treeDeg[x];
    const int cyc = s.cycleDeg[x];
    const int open = 3 - tree - cyc;
    if (open == 0) return !(cyc == 1);
    if (cyc == 2) return force_open(s, x, kTree);
    if (cyc == 1) {
      if (tree == 2) return false;
      if (tree == 1) return force_open(s, x, kCycle);
      return true;
    }
    if (tree == 2) return force_open(s, x, kTree);
    return true;
  }

  bool force_open(State& s, Vertex x, EdgeState value) {
    for (int e : inst_.incident[x]) {
      if (s.edge[e] == kUndecided && !assign(s, e, value)) return false;
    }
    return true;
  }

  bool feasible(State& s) const {
    int leaves = 0;
    int branches = 0;
    for (Vertex v = 0; v < inst_.n; ++v) {
      if (s.cycleDeg[v] == 2) ++leaves;
      if (s.treeDeg[v] >= 2) ++branches;
    }
    if (leaves > inst_.leafTarget || branches > inst_.branchTarget) return false;
    UnionFind reach = s.forest;
    for (int e = 0; e < inst_.m && reach.set_count() > 1; ++e) {
      if (s.edge[e] == kUndecided) reach.unite(inst_.g.edge(e).u, inst_.g.edge(e).v);
    }
    return reach.set_count() == 1;
  }

  const Instance& inst_;
  std::vector<Vertex> queue_;
};

int pick_branch_edge(const Instance& inst, const State& s) {
  int best = -1;
  int bestScore = -1;
  for (int e = 0; e < inst.m; ++e) {
    if (s.edge[e] != kUndecided) continue;
    const auto& ed = inst.g.edge(e);
    const int score = std::max(s.treeDeg[ed.u] + s.cycleDeg[ed.u], s.treeDeg[ed.v] + s.cycleDeg[ed.v]);
    if (score > bestScore) {
      best = e;
      bestScore = score;
    }
  }
  return best;
}

EdgeSet tree_edges_of(const Instance& inst, const State& s) {
  EdgeSet t(inst.g);
  for (int e = 0; e < inst.m; ++e) {
    if (s.edge[e] == kTree) t.insert(e);
  }
  return t;
}

/// Shared across the workers of one solve() call.
struct Control {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> budgetHit{false};
  std::uint64_t budget = 0;

  bool charge() {
    if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > budget) {
      budgetHit.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }
};

/// Depth-first search below one starting state.
class Search {
 public:
  Search(const Instance& inst, SolveMode mode, Control& control)
      : inst_(inst), mode_(mode), control_(control), prop_(inst) {}

  /// cancelled() is polled once per node; a true result abandons the search.
  template <class Cancel>
  void run(const State& start, Cancel&& cancelled) {
    visit(start, cancelled);
  }

  std::vector<EdgeSet> found;
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  bool aborted = false;

 private:
  bool stop_requested() const {
    return aborted || (found.size() == 1 && (mode_ == SolveMode::Decide || mode_ == SolveMode::First));
  }

  template <class Cancel>
  void visit(const State& s, Cancel& cancelled) {
    if (stop_requested()) return;
    if (control_.budgetHit.load(std::memory_order_relaxed) || cancelled() || !control_.charge()) {
      aborted = true;
      return;
    }
    ++nodes;
    if (s.undecided == 0) {
      ++count;
      if (mode_ != SolveMode::Count) found.push_back(tree_edges_of(inst_, s));
      return;
    }
    const int e = pick_branch_edge(inst_, s);
    for (EdgeState value : {kTree, kCycle}) {
      State child = s;
      if (prop_.apply(child, e, value)) visit(child, cancelled);
      if (stop_requested()) return;
    }
  }

  const Instance& inst_;
  SolveMode mode_;
  Control& control_;
  Propagator prop_;
};

struct Subproblem {
  State state;
  std::uint64_t splitNodesBefore;
};

/// Expands the top of the search tree in DFS order, charging exactly the
/// nodes a sequential search would charge before reaching each frontier state.
class Splitter {
 public:
  Splitter(const Instance& inst, Control& control, int depth)
      : inst_(inst), control_(control), prop_(inst), depth_(depth) {}

  void run(const State& root) { expand(root, 0); }

  std::vector<Subproblem> frontier;
  std::uint64_t nodes = 0;
  bool aborted = false;

 private:
  void expand(const State& s, int depth) {
    if (aborted) return;
    if (s.undecided == 0 || depth == depth_) {
      frontier.push_back({s, nodes});
      return;
    }
    if (!control_.charge()) {
      aborted = true;
      return;
    }
    ++nodes;
    const int e = pick_branch_edge(inst_, s);
    for (EdgeState value : {kTree, kCycle}) {
      State child = s;
      if (prop_.apply(child, e, value)) expand(child, depth + 1);
    }
  }

  const Instance& inst_;
  Control& control_;
  Propagator prop_;
  int depth_;
};

struct Outcome {
  std::vector<EdgeSet> found;
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
};

Outcome run_sequential(const Instance& inst, const State& root, SolveMode mode, Control& control) {
  Search search(inst, mode, control);
  search.run(root, [] { return false; });
  return {std::move(search.found), search.count, search.nodes};
}

Outcome run_parallel(const Instance& inst, const State& root, SolveMode mode, Control& control,
                     unsigned workers) {
  int depth = 3;
  for (unsigned w = 1; w < workers; w *= 2) ++depth;
  Splitter splitter(inst, control, depth);
  splitter.run(root);
  if (splitter.aborted) return {};

  const auto& subs = splitter.frontier;
  const bool firstOnly = mode == SolveMode::Decide || mode == SolveMode::First;
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> firstHit{kNone};
  std::atomic<std::size_t> next{0};
  std::vector<Outcome> results(subs.size());

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= subs.size()) return;
      if (firstOnly && firstHit.load() < i) continue;
      Search search(inst, mode, control);
      search.run(subs[i].state, [&] { return firstOnly && firstHit.load(std::memory_order_relaxed) < i; });
      if (firstOnly && !search.found.empty()) {
        std::size_t cur = firstHit.load();
        while (i < cur && !firstHit.compare_exchange_weak(cur, i)) {
        }
      }
      results[i] = {std::move(search.found), search.count, search.nodes};
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  Outcome merged;
  if (firstOnly && firstHit.load() != kNone) {
    const std::size_t hit = firstHit.load();
    merged.nodes = subs[hit].splitNodesBefore;
    for (std::size_t i = 0; i <= hit; ++i) merged.nodes += results[i].nodes;
    merged.found = std::move(results[hit].found);
    merged.count = 1;
    return merged;
  }
  merged.nodes = splitter.nodes;
  for (auto& r : results) {
    merged.nodes += r.nodes;
    merged.count += r.count;
    for (auto& f : r.found) merged.found.push_back(std::move(f));
  }
  return merged;
}

}  // namespace

SolveReport solve(const Graph& g, const SolveOptions& options) {
  if (!is_cubic(g)) throw HistError(HistErrorKind::NotCubic, "graph is not cubic");
  if (!is_connected(g)) throw HistError(HistErrorKind::Disconnected, "graph is not connected");

  SolveReport report;
  const bool counting = options.mode == SolveMode::Count || options.mode == SolveMode::EnumerateAll;
  if (options.useMod4Filter && mod4_filter(g) == FilterVerdict::NoHist) {
    report.verdict = Verdict::NoHist;
    report.filterUsed = FilterUsed::Mod4;
    if (counting) report.count = 0;
    return report;
  }

  const Instance inst(g);
  State root(inst);
  Propagator prop(inst);
  prop.queue_all();
  if (!prop.propagate(root)) {
    report.verdict = Verdict::NoHist;
    if (counting) report.count = 0;
    return report;
  }

  Control control;
  control.budget = options.nodeBudget;
  Outcome outcome = options.workers <= 1
                        ? run_sequential(inst, root, options.mode, control)
                        : run_parallel(inst, root, options.mode, control, options.workers);
  report.nodesExplored = outcome.nodes;

  if (control.budgetHit.load() && !(outcome.count > 0 && !counting)) {
    report.verdict = Verdict::BudgetExceeded;
    report.nodesExplored = control.nodes.load();
    return report;
  }
  std::sort(outcome.found.begin(), outcome.found.end());
  for (const auto& t : outcome.found) report.certificates.push_back(verify_hist(g, t));
  report.verdict = outcome.count > 0 ? Verdict::HasHist : Verdict::NoHist;
  if (counting) report.count = outcome.count;
  return report;
}

}  // namespace histlab::hist
