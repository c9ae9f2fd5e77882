#pragma once

#include <optional>
#include <vector>

#include "meandim/function_system.hpp"
#include "meandim/sigma.hpp"

namespace meandim {

// v^{sigma(n)}(x) = v_n o ... o v_1 (x) when every intermediate point lies in
// the required domain; nullopt otherwise. n = 0 returns x.
std::optional<int> evaluate(const FunctionSystem& fs, int x, const SigmaGenerator& sigma, long n);

// v^{sigma(b,a)}(x): composition over steps a+1..b. b > a >= 0.
std::optional<int> evaluate_window(const FunctionSystem& fs, int x, const SigmaGenerator& sigma,
                                   long a, long b);

// Admissible finite orbit: trace[0] = start, trace[i+1] = maps[symbols[i]](trace[i]).
// extendable means the endpoint supports an infinite continuation, i.e. the
// prefix is the restriction of some element of Psi(X).
struct OrbitPrefix {
  int start = 0;
  std::vector<int> symbols;
  std::vector<int> trace;
  bool extendable = false;
};

// All admissible length-n prefixes from x (n trace points, n-1 edges);
// with require_extendable only those whose endpoint lies in the infinite core.
std::vector<OrbitPrefix> sigma_x_prefixes(const FunctionSystem& fs, const AdmissibilityGraph& g,
                                          int x, int n, bool require_extendable);

// {x : v^{sigma(i)}(x) defined for all i <= n}, ascending.
std::vector<int> sigma_sigma(const FunctionSystem& fs, const SigmaGenerator& sigma, long n);

// Sigma_sigma at the certified-stable horizon pre + |X| * |period|: equal to
// the true survivor set of the eventually periodic sigma.
std::vector<int> sigma_sigma_stable(const FunctionSystem& fs, const SigmaGenerator& sigma);

// max over i in {0,...,n-1} of d(traceA[i], traceB[i]).
// Throws std::invalid_argument when either trace is shorter than n.
double joint_distance(const MetricSpaceModel& space, const std::vector<int>& trace_a,
                      const std::vector<int>& trace_b, int n);

// Memoized orbit evaluation for one (system, sigma, horizon): built once,
// read-only afterwards. step[t][x] = v^{sigma(t)}(x) or -1.
struct OrbitTable {
  std::vector<std::vector<int>> step;

  OrbitTable(const FunctionSystem& fs, const SigmaGenerator& sigma, long horizon);
  int at(long t, int x) const { return step[t][x]; }
  long horizon() const { return static_cast<long>(step.size()) - 1; }
};

}  // namespace meandim
