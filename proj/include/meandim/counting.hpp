#pragma once

#include <optional>
#include <string>
#include <vector>

#include "meandim/function_system.hpp"
#include "meandim/orbit.hpp"
#include "meandim/sigma.hpp"

namespace meandim {

enum class CountMode { Exact, Greedy, Auto };

struct CountOptions {
  CountMode mode = CountMode::Auto;
  long max_nodes = 500000;       // prefix enumeration cap
  long search_budget = 2000000;  // branch-and-bound expansion cap
};

// Horizon-n representatives of Psi(X): extendable orbit prefixes,
// deduplicated by trace (counts depend only on traces). Trace order is
// lexicographic, which makes greedy results deterministic.
struct PrefixNodes {
  std::vector<std::vector<int>> traces;
  bool complete = true;  // false when max_nodes stopped the enumeration
};

PrefixNodes extendable_prefix_nodes(const FunctionSystem& fs, const AdmissibilityGraph& g, int n,
                                    long max_nodes);

// Horizon-n traces of the points of the certified Sigma_sigma under sigma.
PrefixNodes sigma_restricted_nodes(const FunctionSystem& fs, const SigmaGenerator& sigma, int n);

struct CountResult {
  long long count = 0;
  bool exact = false;
  std::vector<int> witness;  // node indices into the PrefixNodes used
  std::string flag;
};

// s(n, eps): maximum pairwise joint-distance-separated subset of the node
// set. Greedy mode (or exhausted budget) yields a flagged lower bound.
CountResult separated_count(const MetricSpaceModel& space, const PrefixNodes& nodes, int n,
                            double eps, const CountOptions& options = {});

// r(n, eps): minimum number of joint-distance eps-balls around nodes covering
// all nodes. Greedy mode yields a flagged upper bound.
CountResult spanning_count(const MetricSpaceModel& space, const PrefixNodes& nodes, int n,
                           double eps, const CountOptions& options = {});

// s(sigma, n, eps) over the sigma-restricted node set; count 0 with a flag
// when Sigma_sigma is empty.
CountResult orbit_separated_count(const FunctionSystem& fs, const SigmaGenerator& sigma, int n,
                                  double eps, const CountOptions& options = {});

struct CountGridEntry {
  int n = 0;
  double eps = 0.0;
  long long separated_lb = 0;
  std::optional<long long> separated_exact;
  long long spanning_ub = 0;
  std::optional<long long> spanning_exact;
  std::string flag;
};

struct CountGrid {
  std::vector<int> n_grid;
  std::vector<double> eps_grid;
  std::vector<CountGridEntry> entries;  // n-major, eps-minor

  const CountGridEntry& at(int n_idx, int eps_idx) const {
    return entries[static_cast<size_t>(n_idx) * eps_grid.size() + eps_idx];
  }

  // Sandwich and monotonicity checks on exact values; empty means consistent.
  std::vector<std::string> consistency_violations() const;
};

// Sweeps (n, eps); when sigma is given the node sets are sigma-restricted.
CountGrid build_count_grid(const FunctionSystem& fs, const AdmissibilityGraph& g,
                           const std::vector<int>& n_grid, const std::vector<double>& eps_grid,
                           const CountOptions& options = {},
                           const SigmaGenerator* sigma = nullptr);

}  // namespace meandim
