#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace histlab {

/// Disjoint sets with union by size and path halving. Copyable, so search
/// code can snapshot it together with the rest of its state.
class UnionFind {
 public:
  UnionFind() = default;
  explicit UnionFind(int n)
      : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns false when a and b were already in the same set.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }
  [[nodiscard]] int set_count() const noexcept { return sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int sets_ = 0;
};

}  // namespace histlab
