#include "meandim/orbit.hpp"

#include <algorithm>
#include <stdexcept>

namespace meandim {

namespace {

int checked_symbol(const FunctionSystem& fs, const SigmaGenerator& sigma, long n) {
  const int m = sigma.symbol(n);
  if (m < 0 || m >= static_cast<int>(fs.maps.size()))
    throw std::invalid_argument("sigma references unknown map index");
  return m;
}

}  // namespace

std::optional<int> evaluate(const FunctionSystem& fs, int x, const SigmaGenerator& sigma, long n) {
  if (n < 0) throw std::invalid_argument("evaluate: negative step count");
  int p = x;
  for (long i = 1; i <= n; ++i) {
    const PartialMap& v = fs.maps[checked_symbol(fs, sigma, i)];
    if (!v.in_domain(p)) return std::nullopt;
    p = v.apply(p);
  }
  return p;
}

std::optional<int> evaluate_window(const FunctionSystem& fs, int x, const SigmaGenerator& sigma,
                                   long a, long b) {
  if (a < 0 || b <= a) throw std::invalid_argument("evaluate_window: requires b > a >= 0");
  int p = x;
  for (long i = a + 1; i <= b; ++i) {
    const PartialMap& v = fs.maps[checked_symbol(fs, sigma, i)];
    if (!v.in_domain(p)) return std::nullopt;
    p = v.apply(p);
  }
  return p;
}

std::vector<OrbitPrefix> sigma_x_prefixes(const FunctionSystem& fs, const AdmissibilityGraph& g,
                                          int x, int n, bool require_extendable) {
  if (n < 1) throw std::invalid_argument("sigma_x_prefixes: n must be >= 1");
  std::vector<OrbitPrefix> out;
  OrbitPrefix current;
  current.start = x;
  current.trace.push_back(x);

  // DFS over the admissibility graph; edges per node are sorted by map index
  // so the output order is deterministic.
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n - 1) {
      OrbitPrefix p = current;
      p.extendable = g.in_core(p.trace.back());
      if (!require_extendable || p.extendable) out.push_back(std::move(p));
      return;
    }
    const int here = current.trace.back();
    for (const auto& [m, y] : g.out[here]) {
      current.symbols.push_back(m);
      current.trace.push_back(y);
      self(self, depth + 1);
      current.symbols.pop_back();
      current.trace.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<int> sigma_sigma(const FunctionSystem& fs, const SigmaGenerator& sigma, long n) {
  std::vector<int> survivors;
  for (int x = 0; x < fs.space.size(); ++x)
    if (evaluate(fs, x, sigma, n).has_value()) survivors.push_back(x);
  return survivors;
}

std::vector<int> sigma_sigma_stable(const FunctionSystem& fs, const SigmaGenerator& sigma) {
  return sigma_sigma(fs, sigma, sigma.stable_horizon(fs.space.size()));
}

double joint_distance(const MetricSpaceModel& space, const std::vector<int>& trace_a,
                      const std::vector<int>& trace_b, int n) {
  if (static_cast<int>(trace_a.size()) < n || static_cast<int>(trace_b.size()) < n)
    throw std::invalid_argument("joint_distance: trace shorter than horizon");
  double d = 0.0;
  for (int i = 0; i < n; ++i) d = std::max(d, space.dist(trace_a[i], trace_b[i]));
  return d;
}

OrbitTable::OrbitTable(const FunctionSystem& fs, const SigmaGenerator& sigma, long horizon) {
  const int n = fs.space.size();
  step.resize(horizon + 1);
  step[0].resize(n);
  for (int x = 0; x < n; ++x) step[0][x] = x;
  for (long t = 1; t <= horizon; ++t) {
    const PartialMap& v = fs.maps[sigma.symbol(t)];
    step[t].assign(n, -1);
    for (int x = 0; x < n; ++x) {
      const int p = step[t - 1][x];
      if (p >= 0 && v.in_domain(p)) step[t][x] = v.apply(p);
    }
  }
}

}  // namespace meandim
