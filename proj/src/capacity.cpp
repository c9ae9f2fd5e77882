#include "meandim/capacity.hpp"

#include <algorithm>
#include <stdexcept>

#include "meandim/tolerance.hpp"

namespace meandim {

namespace {

constexpr long long kNegInf = -(1LL << 60);

// dp[y] after t steps = max visit count over admissible t-edge paths ending
// at y (from the configured start set).
std::vector<long long> run_dp(const AdmissibilityGraph& g, const std::vector<char>& in_A,
                              std::vector<long long> dp, int edges) {
  for (int t = 0; t < edges; ++t) {
    std::vector<long long> next(dp.size(), kNegInf);
    for (size_t y = 0; y < dp.size(); ++y) {
      if (dp[y] == kNegInf) continue;
      for (const auto& [m, z] : g.out[y]) {
        const long long cand = dp[y] + (in_A[z] ? 1 : 0);
        next[z] = std::max(next[z], cand);
      }
    }
    dp = std::move(next);
  }
  return dp;
}

CapacityValue best_core_endpoint(const AdmissibilityGraph& g, const std::vector<long long>& dp,
                                 int n) {
  CapacityValue cv;
  cv.horizon = n;
  long long best = kNegInf;
  for (size_t y = 0; y < dp.size(); ++y)
    if (g.infinite_core[y] && dp[y] > best) best = dp[y];
  if (best > kNegInf) {
    cv.defined = true;
    cv.visits = best;
  }
  return cv;
}

}  // namespace

CapacityValue capacity(const FunctionSystem& fs, const AdmissibilityGraph& g,
                       const std::vector<char>& in_A, int n, int x) {
  if (n < 1) throw std::invalid_argument("capacity: n must be >= 1");
  std::vector<long long> dp(fs.space.size(), kNegInf);
  dp[x] = in_A[x] ? 1 : 0;
  return best_core_endpoint(g, run_dp(g, in_A, std::move(dp), n - 1), n);
}

CapacityValue capacity_sup(const FunctionSystem& fs, const AdmissibilityGraph& g,
                           const std::vector<char>& in_A, int n) {
  if (n < 1) throw std::invalid_argument("capacity: n must be >= 1");
  std::vector<long long> dp(fs.space.size(), kNegInf);
  for (int x = 0; x < fs.space.size(); ++x) dp[x] = in_A[x] ? 1 : 0;
  return best_core_endpoint(g, run_dp(g, in_A, std::move(dp), n - 1), n);
}

OcapResult ocap(const FunctionSystem& fs, const AdmissibilityGraph& g,
                const std::vector<char>& in_A, int curve_horizon) {
  OcapResult result;
  if (g.core_empty()) return result;

  // core-restricted adjacency; cycles of the admissibility graph live here
  const int n = fs.space.size();
  std::vector<std::vector<int>> adj(n);
  for (int x = 0; x < n; ++x) {
    if (!g.infinite_core[x]) continue;
    for (const auto& [m, y] : g.out[x])
      if (g.infinite_core[y]) adj[x].push_back(y);
  }
  const CycleMean mean = max_cycle_mean(adj, in_A);
  if (!mean.defined)
    throw std::logic_error("ocap: nonempty core without a cycle");
  result.defined = true;
  result.num = mean.num;
  result.den = mean.den;

  const int horizon = curve_horizon > 0 ? curve_horizon : 2 * n;
  for (int k = 1; k <= horizon; ++k)
    result.dp_curve.push_back(capacity_sup(fs, g, in_A, k).value());
  return result;
}

std::vector<int> delta_shell(const MetricSpaceModel& space, const std::vector<int>& V,
                             double delta) {
  std::vector<char> in_V(space.size(), 0);
  for (int p : V) in_V[p] = 1;
  std::vector<int> shell;
  for (int y = 0; y < space.size(); ++y) {
    double to_V = -1.0, to_comp = -1.0;
    for (int z = 0; z < space.size(); ++z) {
      const double d = space.dist(y, z);
      if (in_V[z] && (to_V < 0 || d < to_V)) to_V = d;
      if (!in_V[z] && (to_comp < 0 || d < to_comp)) to_comp = d;
    }
    const bool near_V = to_V >= 0 && to_V <= delta + kDistanceTol;
    const bool near_comp = to_comp >= 0 && to_comp <= delta + kDistanceTol;
    if (near_V && near_comp) shell.push_back(y);
  }
  return shell;
}

SbpReport sbp_check(const FunctionSystem& fs, const AdmissibilityGraph& g, double delta,
                    const std::vector<double>& neighborhood_radii,
                    const std::vector<int>& sample_points) {
  if (delta <= 0.0) throw std::invalid_argument("sbp_check: shell parameter must be positive");
  SbpReport report;
  report.delta = delta;

  std::vector<int> points = sample_points;
  if (points.empty())
    for (int x = 0; x < fs.space.size(); ++x) points.push_back(x);

  std::vector<double> radii = fs.space.distance_values();
  radii.insert(radii.begin(), fs.space.resolution / 2.0);

  for (int x : points)
    for (double R : neighborhood_radii) {
      SbpCase c;
      c.center = x;
      c.neighborhood_radius = R;
      for (double r : radii) {
        if (r > R) break;  // V = ball(x, r) must stay inside U = ball(x, R)
        const std::vector<int> V = fs.space.ball(x, r);
        if (V.empty()) continue;
        const std::vector<int> shell = delta_shell(fs.space, V, delta);
        std::vector<char> in_shell(fs.space.size(), 0);
        for (int p : shell) in_shell[p] = 1;
        OcapResult oc = ocap(fs, g, in_shell, 1);
        if (!oc.defined || oc.is_zero()) {
          c.found = true;
          c.chosen_radius = r;
          c.shell = shell;
          c.shell_ocap = std::move(oc);
          break;
        }
        if (!c.found && c.shell.empty()) {
          // remember the smallest attempt for the report
          c.chosen_radius = r;
          c.shell = shell;
          c.shell_ocap = std::move(oc);
        }
      }
      report.holds_everywhere = report.holds_everywhere && c.found;
      report.cases.push_back(std::move(c));
    }
  return report;
}

}  // namespace meandim
