#pragma once

#include <string>
#include <vector>

#include "meandim/function_system.hpp"
#include "meandim/graph_alg.hpp"

namespace meandim {

// Best time-average of visits to the target set over admissible extendable
// length-n prefixes; visits * n is always an integer count.
struct CapacityValue {
  bool defined = false;
  long long visits = 0;
  long long horizon = 1;
  double value() const { return defined ? static_cast<double>(visits) / horizon : 0.0; }
};

CapacityValue capacity(const FunctionSystem& fs, const AdmissibilityGraph& g,
                       const std::vector<char>& in_A, int n, int x);

// sup over starting points of capacity(n, ., A).
CapacityValue capacity_sup(const FunctionSystem& fs, const AdmissibilityGraph& g,
                           const std::vector<char>& in_A, int n);

struct OcapResult {
  bool defined = false;        // false iff the infinite core is empty
  long long num = 0;
  long long den = 1;
  std::vector<double> dp_curve;  // sup_x cap(n, x, A) for n = 1..curve length
  double value() const { return defined ? static_cast<double>(num) / den : 0.0; }
  bool is_zero() const { return defined && num == 0; }
};

// Exact orbit capacity: on a finite model the limit of the DP curve equals
// the maximum cycle mean of the indicator weight over the core subgraph.
OcapResult ocap(const FunctionSystem& fs, const AdmissibilityGraph& g,
                const std::vector<char>& in_A, int curve_horizon = 0);

// delta-shell surrogate for the boundary of V: points within delta of both V
// and its complement.
std::vector<int> delta_shell(const MetricSpaceModel& space, const std::vector<int>& V,
                             double delta);

struct SbpCase {
  int center = -1;
  double neighborhood_radius = 0.0;
  bool found = false;
  double chosen_radius = 0.0;
  std::vector<int> shell;
  OcapResult shell_ocap;
};

struct SbpReport {
  double delta = 0.0;
  std::vector<SbpCase> cases;
  bool holds_everywhere = true;
};

// For each sampled (x, ball(x, R)) pair, search for a sub-ball whose
// delta-shell has orbit capacity zero.
SbpReport sbp_check(const FunctionSystem& fs, const AdmissibilityGraph& g, double delta,
                    const std::vector<double>& neighborhood_radii,
                    const std::vector<int>& sample_points = {});

}  // namespace meandim
