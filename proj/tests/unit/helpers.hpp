#pragma once

#include <cstdint>
#include <vector>

#include "histlab/construct.hpp"
#include "histlab/profile.hpp"

namespace testing {

/// Connected random cubic graph on n vertices; the first connected sample
/// from seeds seed, seed+1, ...
inline histlab::Graph connected_cubic(int n, std::uint64_t seed) {
  for (;; ++seed) {
    auto g = histlab::construct::random_regular(n, 3, seed);
    if (histlab::is_connected(g)) return g;
  }
}

/// The 200-graph property corpus: n cycles through 8..16 (even).
inline std::vector<histlab::Graph> random_cubic_corpus(int count = 200) {
  std::vector<histlab::Graph> out;
  const int sizes[] = {8, 10, 12, 14, 16};
  for (int i = 0; i < count; ++i) out.push_back(connected_cubic(sizes[i % 5], 1000ULL * static_cast<std::uint64_t>(i)));
  return out;
}

inline std::vector<int> indices_of(const histlab::EdgeSet& s) { return s.indices(); }

}  // namespace testing
