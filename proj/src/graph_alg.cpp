#include "meandim/graph_alg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace meandim {

namespace {

constexpr long long kNegInf = -(1LL << 60);

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

std::vector<int> tarjan_scc(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stack;
  std::vector<char> on_stack(n, 0);
  int counter = 0, comps = 0;

  // Iterative Tarjan; frames hold (node, next edge index).
  std::vector<std::pair<int, size_t>> frames;
  for (int root = 0; root < n; ++root) {
    if (num[root] >= 0) continue;
    frames.push_back({root, 0});
    while (!frames.empty()) {
      auto& [v, ei] = frames.back();
      if (ei == 0) {
        num[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      if (ei < adj[v].size()) {
        const int w = adj[v][ei++];
        if (num[w] < 0) {
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        if (low[v] == num[v]) {
          while (true) {
            const int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = comps;
            if (w == v) break;
          }
          ++comps;
        }
        const int child = v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().first] = std::min(low[frames.back().first], low[child]);
      }
    }
  }
  return comp;
}

}  // namespace

// Karp's algorithm per strongly connected component. Node weights become
// weights of incoming edges, so a cycle collects each of its nodes once.
CycleMean max_cycle_mean(const std::vector<std::vector<int>>& adjacency,
                         const std::vector<char>& node_weight) {
  const int n = static_cast<int>(adjacency.size());
  CycleMean best;
  if (n == 0) return best;
  const std::vector<int> comp = tarjan_scc(adjacency);
  const int comps = *std::max_element(comp.begin(), comp.end()) + 1;

  for (int c = 0; c < comps; ++c) {
    std::vector<int> nodes;
    for (int v = 0; v < n; ++v)
      if (comp[v] == c) nodes.push_back(v);
    bool has_cycle = nodes.size() > 1;
    if (!has_cycle)
      for (int w : adjacency[nodes[0]])
        if (w == nodes[0]) has_cycle = true;
    if (!has_cycle) continue;

    const int k = static_cast<int>(nodes.size());
    std::vector<int> local(n, -1);
    for (int i = 0; i < k; ++i) local[nodes[i]] = i;

    // D[t][i] = max weight of a t-edge path from nodes[0] to nodes[i]
    // inside the component.
    std::vector<std::vector<long long>> D(k + 1, std::vector<long long>(k, kNegInf));
    D[0][0] = 0;
    for (int t = 1; t <= k; ++t)
      for (int i = 0; i < k; ++i) {
        if (D[t - 1][i] == kNegInf) continue;
        for (int w : adjacency[nodes[i]]) {
          if (comp[w] != c) continue;
          const int j = local[w];
          const long long cand = D[t - 1][i] + node_weight[w];
          D[t][j] = std::max(D[t][j], cand);
        }
      }

    for (int i = 0; i < k; ++i) {
      if (D[k][i] == kNegInf) continue;
      // min over t of (D[k] - D[t]) / (k - t), as a fraction
      long long bn = 0, bd = 0;
      bool first = true;
      for (int t = 0; t < k; ++t) {
        if (D[t][i] == kNegInf) continue;
        const long long num = D[k][i] - D[t][i];
        const long long den = k - t;
        if (first || num * bd < bn * den) {
          bn = num;
          bd = den;
          first = false;
        }
      }
      if (first) continue;
      if (!best.defined || bn * best.den > best.num * bd) {
        best.defined = true;
        best.num = bn;
        best.den = bd;
      }
    }
  }
  if (best.defined) {
    const long long g = best.num == 0 ? best.den : gcd_ll(best.num, best.den);
    best.num /= g;
    best.den /= g;
  }
  return best;
}

IndependentSetResult greedy_independent_set(const std::vector<std::vector<int>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  IndependentSetResult r;
  std::vector<char> blocked(n, 0);
  for (int v = 0; v < n; ++v) {
    if (blocked[v]) continue;
    r.witness.push_back(v);
    for (int w : adjacency[v]) blocked[w] = 1;
  }
  r.size = static_cast<long long>(r.witness.size());
  r.exact = false;
  return r;
}

namespace {

struct MisSearch {
  const std::vector<std::vector<int>>& adj;
  long budget;
  bool exhausted = false;

  // candidates is sorted; returns best independent set within it.
  std::vector<int> solve(std::vector<int> candidates, size_t prune_below) {
    if (exhausted) return {};
    if (--budget < 0) {
      exhausted = true;
      return {};
    }
    // pick the candidate of maximum degree within the candidate set
    int pick = -1;
    size_t pick_deg = 0;
    std::vector<char> in(adjacentSize(), 0);
    for (int v : candidates) in[v] = 1;
    for (int v : candidates) {
      size_t deg = 0;
      for (int w : adj[v])
        if (in[w]) ++deg;
      if (pick < 0 || deg > pick_deg) {
        pick = v;
        pick_deg = deg;
      }
    }
    if (pick < 0) return {};
    if (pick_deg == 0) return candidates;  // edgeless: take everything
    if (candidates.size() <= prune_below) return {};

    // include pick
    std::vector<int> rest;
    for (int v : candidates) {
      if (v == pick) continue;
      bool adjacent = false;
      for (int w : adj[pick])
        if (w == v) {
          adjacent = true;
          break;
        }
      if (!adjacent) rest.push_back(v);
    }
    std::vector<int> with_pick = solve(rest, prune_below > 0 ? prune_below - 1 : 0);
    with_pick.push_back(pick);

    // exclude pick
    std::vector<int> without;
    for (int v : candidates)
      if (v != pick) without.push_back(v);
    std::vector<int> skip_pick = solve(without, std::max(prune_below, with_pick.size()));

    return skip_pick.size() > with_pick.size() ? skip_pick : with_pick;
  }

  size_t adjacentSize() const { return adj.size(); }
};

}  // namespace

IndependentSetResult max_independent_set(const std::vector<std::vector<int>>& adjacency,
                                         long budget) {
  const int n = static_cast<int>(adjacency.size());
  // connected components
  std::vector<int> comp(n, -1);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> queue{s};
    comp[s] = comps;
    while (!queue.empty()) {
      const int v = queue.back();
      queue.pop_back();
      for (int w : adjacency[v])
        if (comp[w] < 0) {
          comp[w] = comps;
          queue.push_back(w);
        }
    }
    ++comps;
  }

  IndependentSetResult result;
  result.exact = true;
  MisSearch search{adjacency, budget};
  for (int c = 0; c < comps && !search.exhausted; ++c) {
    std::vector<int> nodes;
    for (int v = 0; v < n; ++v)
      if (comp[v] == c) nodes.push_back(v);
    std::vector<int> sol = search.solve(nodes, 0);
    result.witness.insert(result.witness.end(), sol.begin(), sol.end());
  }
  if (search.exhausted) return greedy_independent_set(adjacency);
  std::sort(result.witness.begin(), result.witness.end());
  result.size = static_cast<long long>(result.witness.size());
  return result;
}

SetCoverResult greedy_set_cover(const std::vector<std::vector<int>>& sets, int universe) {
  SetCoverResult r;
  std::vector<char> covered(universe, 0);
  int remaining = universe;
  while (remaining > 0) {
    int best = -1, best_gain = 0;
    for (int s = 0; s < static_cast<int>(sets.size()); ++s) {
      int gain = 0;
      for (int e : sets[s])
        if (!covered[e]) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = s;
      }
    }
    if (best < 0) throw std::invalid_argument("set family does not cover the universe");
    r.chosen.push_back(best);
    for (int e : sets[best])
      if (!covered[e]) {
        covered[e] = 1;
        --remaining;
      }
  }
  std::sort(r.chosen.begin(), r.chosen.end());
  r.size = static_cast<long long>(r.chosen.size());
  r.exact = false;
  return r;
}

namespace {

struct CoverSearch {
  const std::vector<std::vector<int>>& sets;
  const std::vector<std::vector<int>>& covering;  // per element: sets containing it
  size_t max_set_size;
  long budget;
  bool exhausted = false;
  std::vector<int> best;
  std::vector<char> covered;
  int uncovered;
  std::vector<int> chosen;

  void run() {
    if (exhausted) return;
    if (--budget < 0) {
      exhausted = true;
      return;
    }
    if (uncovered == 0) {
      if (best.empty() || chosen.size() < best.size()) best = chosen;
      return;
    }
    const size_t lower =
        chosen.size() + (uncovered + max_set_size - 1) / max_set_size;
    if (!best.empty() && lower >= best.size()) return;

    // branch on the uncovered element with fewest covering sets
    int pick = -1;
    size_t pick_options = 0;
    for (int e = 0; e < static_cast<int>(covered.size()); ++e) {
      if (covered[e]) continue;
      const size_t options = covering[e].size();
      if (pick < 0 || options < pick_options) {
        pick = e;
        pick_options = options;
      }
    }
    for (int s : covering[pick]) {
      std::vector<int> newly;
      for (int e : sets[s])
        if (!covered[e]) {
          covered[e] = 1;
          newly.push_back(e);
        }
      uncovered -= static_cast<int>(newly.size());
      chosen.push_back(s);
      run();
      chosen.pop_back();
      uncovered += static_cast<int>(newly.size());
      for (int e : newly) covered[e] = 0;
      if (exhausted) return;
    }
  }
};

}  // namespace

SetCoverResult min_set_cover(const std::vector<std::vector<int>>& sets, int universe, long budget) {
  std::vector<std::vector<int>> covering(universe);
  size_t max_size = 1;
  for (int s = 0; s < static_cast<int>(sets.size()); ++s) {
    max_size = std::max(max_size, sets[s].size());
    for (int e : sets[s]) covering[e].push_back(s);
  }
  for (int e = 0; e < universe; ++e)
    if (covering[e].empty())
      throw std::invalid_argument("set family does not cover the universe");

  CoverSearch search{sets, covering, max_size, budget};
  search.covered.assign(universe, 0);
  search.uncovered = universe;
  search.best = greedy_set_cover(sets, universe).chosen;
  search.run();
  if (search.exhausted) return greedy_set_cover(sets, universe);
  SetCoverResult r;
  r.chosen = search.best;
  std::sort(r.chosen.begin(), r.chosen.end());
  r.size = static_cast<long long>(r.chosen.size());
  r.exact = true;
  return r;
}

}  // namespace meandim
