#pragma once

#include <cstdint>
#include <vector>

namespace meandim {

// Exact maximum mean of 0/1 node weights over directed cycles, as a reduced
// fraction. defined == false when the graph is acyclic.
struct CycleMean {
  bool defined = false;
  long long num = 0;
  long long den = 1;
  double value() const { return defined ? static_cast<double>(num) / den : 0.0; }
};

// adjacency[u] = successor list; weights are per-node.
CycleMean max_cycle_mean(const std::vector<std::vector<int>>& adjacency,
                         const std::vector<char>& node_weight);

struct IndependentSetResult {
  long long size = 0;
  std::vector<int> witness;
  bool exact = false;
};

// Maximum independent set via component-wise branch and bound; falls back to
// the deterministic greedy-by-index maximal set (a lower bound) when the
// expansion budget is exhausted.
IndependentSetResult max_independent_set(const std::vector<std::vector<int>>& adjacency,
                                         long budget);

IndependentSetResult greedy_independent_set(const std::vector<std::vector<int>>& adjacency);

struct SetCoverResult {
  long long size = 0;
  std::vector<int> chosen;  // indices into the set family
  bool exact = false;
};

// Minimum number of the given sets covering {0..universe-1}. Exact branch and
// bound within budget, greedy upper bound otherwise. Assumes the family does
// cover the universe.
SetCoverResult min_set_cover(const std::vector<std::vector<int>>& sets, int universe, long budget);

SetCoverResult greedy_set_cover(const std::vector<std::vector<int>>& sets, int universe);

}  // namespace meandim
