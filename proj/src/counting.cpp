#include "meandim/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "meandim/graph_alg.hpp"
#include "meandim/tolerance.hpp"

namespace meandim {

namespace {

struct TraceHash {
  size_t operator()(const std::vector<int>& t) const {
    size_t h = 1469598103934665603ull;
    for (int v : t) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// adjacency of the conflict graph: nodes are close (not separated) when the
// joint distance stays below eps at every step.
std::vector<std::vector<int>> conflict_adjacency(const MetricSpaceModel& space,
                                                 const std::vector<std::vector<int>>& traces,
                                                 int n, double eps) {
  const int count = static_cast<int>(traces.size());
  std::vector<std::vector<int>> adj(count);
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) {
      bool close = true;
      for (int t = 0; t < n; ++t)
        if (separated_at(space.dist(traces[i][t], traces[j][t]), eps)) {
          close = false;
          break;
        }
      if (close) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  return adj;
}

}  // namespace

PrefixNodes extendable_prefix_nodes(const FunctionSystem& fs, const AdmissibilityGraph& g, int n,
                                    long max_nodes) {
  if (n < 1) throw std::invalid_argument("prefix horizon must be >= 1");
  PrefixNodes nodes;
  const int size = fs.space.size();

  // reach[r][x]: a path of exactly r edges from x ends in the core.
  std::vector<std::vector<char>> reach(n, std::vector<char>(size, 0));
  for (int x = 0; x < size; ++x) reach[0][x] = g.infinite_core[x];
  for (int r = 1; r < n; ++r)
    for (int x = 0; x < size; ++x)
      for (const auto& [m, y] : g.out[x])
        if (reach[r - 1][y]) {
          reach[r][x] = 1;
          break;
        }

  std::unordered_set<std::vector<int>, TraceHash> seen;
  std::vector<int> trace;
  bool truncated = false;
  auto rec = [&](auto&& self, int x, int depth) -> void {
    if (truncated) return;
    trace.push_back(x);
    if (depth == n - 1) {
      if (seen.insert(trace).second) {
        if (static_cast<long>(seen.size()) > max_nodes) {
          truncated = true;
          seen.erase(trace);
        }
      }
    } else {
      for (const auto& [m, y] : g.out[x]) {
        if (!reach[n - 2 - depth][y]) continue;
        self(self, y, depth + 1);
        if (truncated) break;
      }
    }
    trace.pop_back();
  };
  for (int x = 0; x < size && !truncated; ++x) {
    if (!reach[n - 1][x]) continue;
    rec(rec, x, 0);
  }

  nodes.traces.assign(seen.begin(), seen.end());
  std::sort(nodes.traces.begin(), nodes.traces.end());
  nodes.complete = !truncated;
  return nodes;
}

PrefixNodes sigma_restricted_nodes(const FunctionSystem& fs, const SigmaGenerator& sigma, int n) {
  if (n < 1) throw std::invalid_argument("prefix horizon must be >= 1");
  PrefixNodes nodes;
  std::unordered_set<std::vector<int>, TraceHash> seen;
  for (int x : sigma_sigma_stable(fs, sigma)) {
    std::vector<int> trace;
    trace.reserve(n);
    int p = x;
    trace.push_back(p);
    for (int t = 1; t < n; ++t) {
      p = fs.maps[sigma.symbol(t)].apply(p);
      trace.push_back(p);
    }
    seen.insert(std::move(trace));
  }
  nodes.traces.assign(seen.begin(), seen.end());
  std::sort(nodes.traces.begin(), nodes.traces.end());
  return nodes;
}

CountResult separated_count(const MetricSpaceModel& space, const PrefixNodes& nodes, int n,
                            double eps, const CountOptions& options) {
  CountResult r;
  if (nodes.traces.empty()) {
    r.exact = nodes.complete;
    r.flag = nodes.complete ? "" : "node-budget-exceeded";
    return r;
  }
  const auto adj = conflict_adjacency(space, nodes.traces, n, eps);
  bool edgeless = true;
  for (const auto& a : adj)
    if (!a.empty()) {
      edgeless = false;
      break;
    }

  IndependentSetResult mis;
  if (options.mode == CountMode::Greedy && !edgeless) {
    mis = greedy_independent_set(adj);
    r.flag = "greedy-lower-bound";
  } else {
    mis = max_independent_set(adj, options.search_budget);
    if (!mis.exact) r.flag = "search-budget-exceeded;greedy-lower-bound";
  }
  r.count = mis.size;
  r.witness = mis.witness;
  r.exact = mis.exact || edgeless;
  if (!nodes.complete) {
    r.exact = false;
    r.flag += (r.flag.empty() ? "" : ";");
    r.flag += "node-budget-exceeded";
  }
  return r;
}

CountResult spanning_count(const MetricSpaceModel& space, const PrefixNodes& nodes, int n,
                           double eps, const CountOptions& options) {
  CountResult r;
  if (nodes.traces.empty()) {
    r.exact = nodes.complete;
    r.flag = nodes.complete ? "" : "node-budget-exceeded";
    return r;
  }
  const int count = static_cast<int>(nodes.traces.size());
  std::vector<std::vector<int>> balls(count);
  for (int i = 0; i < count; ++i) balls[i].push_back(i);
  const auto adj = conflict_adjacency(space, nodes.traces, n, eps);
  for (int i = 0; i < count; ++i)
    for (int j : adj[i]) balls[i].push_back(j);
  for (auto& b : balls) std::sort(b.begin(), b.end());

  SetCoverResult sc;
  if (options.mode == CountMode::Greedy) {
    sc = greedy_set_cover(balls, count);
    r.flag = "greedy-upper-bound";
  } else {
    sc = min_set_cover(balls, count, options.search_budget);
    if (!sc.exact) r.flag = "search-budget-exceeded;greedy-upper-bound";
  }
  r.count = sc.size;
  r.witness = sc.chosen;
  r.exact = sc.exact;
  if (!nodes.complete) {
    r.exact = false;
    r.flag += (r.flag.empty() ? "" : ";");
    r.flag += "node-budget-exceeded";
  }
  return r;
}

CountResult orbit_separated_count(const FunctionSystem& fs, const SigmaGenerator& sigma, int n,
                                  double eps, const CountOptions& options) {
  const PrefixNodes nodes = sigma_restricted_nodes(fs, sigma, n);
  if (nodes.traces.empty()) {
    CountResult r;
    r.exact = true;
    r.flag = "sigma-survivor-set-empty";
    return r;
  }
  return separated_count(fs.space, nodes, n, eps, options);
}

std::vector<std::string> CountGrid::consistency_violations() const {
  std::vector<std::string> out;
  auto entry_name = [&](const CountGridEntry& e) {
    return "(n=" + std::to_string(e.n) + ",eps=" + std::to_string(e.eps) + ")";
  };

  for (size_t ni = 0; ni < n_grid.size(); ++ni)
    for (size_t ei = 0; ei < eps_grid.size(); ++ei) {
      const auto& e = at(static_cast<int>(ni), static_cast<int>(ei));
      if (e.separated_exact && e.spanning_exact && *e.spanning_exact > *e.separated_exact)
        out.push_back("sandwich r<=s fails at " + entry_name(e));
      // r(n, eps/2) against s(n, eps) when eps/2 is on the grid
      for (size_t ej = 0; ej < eps_grid.size(); ++ej) {
        if (!approx_eq(eps_grid[ej], eps_grid[ei] / 2.0)) continue;
        const auto& half = at(static_cast<int>(ni), static_cast<int>(ej));
        if (e.separated_exact && half.spanning_exact && *e.separated_exact > *half.spanning_exact)
          out.push_back("sandwich s(eps)<=r(eps/2) fails at " + entry_name(e));
      }
    }

  // monotone in n (counts nondecreasing) and in eps (nonincreasing as eps grows)
  for (size_t ei = 0; ei < eps_grid.size(); ++ei)
    for (size_t ni = 0; ni + 1 < n_grid.size(); ++ni) {
      const auto& a = at(static_cast<int>(ni), static_cast<int>(ei));
      const auto& b = at(static_cast<int>(ni + 1), static_cast<int>(ei));
      if (a.separated_exact && b.separated_exact && *b.separated_exact < *a.separated_exact)
        out.push_back("s not nondecreasing in n at " + entry_name(b));
      if (a.spanning_exact && b.spanning_exact && *b.spanning_exact < *a.spanning_exact)
        out.push_back("r not nondecreasing in n at " + entry_name(b));
    }
  for (size_t ni = 0; ni < n_grid.size(); ++ni)
    for (size_t ei = 0; ei + 1 < eps_grid.size(); ++ei) {
      // grids are stored as given; compare any ordered pair of radii
      for (size_t ej = ei + 1; ej < eps_grid.size(); ++ej) {
        const size_t small = eps_grid[ei] < eps_grid[ej] ? ei : ej;
        const size_t large = small == ei ? ej : ei;
        if (approx_eq(eps_grid[small], eps_grid[large])) continue;
        const auto& fine = at(static_cast<int>(ni), static_cast<int>(small));
        const auto& coarse = at(static_cast<int>(ni), static_cast<int>(large));
        if (fine.separated_exact && coarse.separated_exact &&
            *coarse.separated_exact > *fine.separated_exact)
          out.push_back("s not nonincreasing in eps at " + entry_name(coarse));
        if (fine.spanning_exact && coarse.spanning_exact &&
            *coarse.spanning_exact > *fine.spanning_exact)
          out.push_back("r not nonincreasing in eps at " + entry_name(coarse));
      }
    }
  return out;
}

CountGrid build_count_grid(const FunctionSystem& fs, const AdmissibilityGraph& g,
                           const std::vector<int>& n_grid, const std::vector<double>& eps_grid,
                           const CountOptions& options, const SigmaGenerator* sigma) {
  CountGrid grid;
  grid.n_grid = n_grid;
  grid.eps_grid = eps_grid;
  for (int n : n_grid) {
    const PrefixNodes nodes = sigma ? sigma_restricted_nodes(fs, *sigma, n)
                                    : extendable_prefix_nodes(fs, g, n, options.max_nodes);
    for (double eps : eps_grid) {
      CountGridEntry e;
      e.n = n;
      e.eps = eps;
      const CountResult sep = separated_count(fs.space, nodes, n, eps, options);
      const CountResult span = spanning_count(fs.space, nodes, n, eps, options);
      e.separated_lb = sep.count;
      if (sep.exact) e.separated_exact = sep.count;
      e.spanning_ub = span.count;
      if (span.exact) e.spanning_exact = span.count;
      e.flag = sep.flag;
      if (!span.flag.empty()) {
        if (!e.flag.empty()) e.flag += ";";
        e.flag += span.flag;
      }
      grid.entries.push_back(std::move(e));
    }
  }
  return grid;
}

}  // namespace meandim
