#pragma once

#include <string>
#include <vector>

#include "meandim/capacity.hpp"
#include "meandim/compatibility.hpp"
#include "meandim/function_system.hpp"
#include "meandim/sigma.hpp"

namespace meandim {

// Matched shrunk pair: closure(V) inside U, per cover element.
struct ShrunkPair {
  std::vector<int> U;
  std::vector<int> V;
};

struct PartitionOfUnity {
  std::vector<int> carrier;               // certified Sigma_sigma
  std::vector<std::vector<double>> phi;   // [j][ambient point], defined on all points
  std::vector<std::vector<int>> support;  // support of phi_j (ambient)
  std::vector<int> boundary_region;       // ambient points with some phi in (0,1)
};

struct LsbpCertificate {
  bool premises_ok = false;
  std::vector<std::string> premise_failures;  // identifies the violating (x, j)
  double max_sum_error = 0.0;                 // sup over carrier of |sum phi - 1|
  bool subordinate = false;                   // support(phi_j) subset U_j
  CapacityValue boundary_capacity;            // sup_x cap(N, x, boundary region)
  bool boundary_small = false;                // boundary capacity < eps
  std::vector<std::string> notes;
};

struct LsbpResult {
  PartitionOfUnity partition;
  LsbpCertificate certificate;
  double delta = 0.0;
  int horizon = 0;
  double eps = 0.0;
};

// Partition of unity subordinate to {U_j}, built from the shell distances of
// the shrunk sets exactly per the min/recursion construction; the
// certificate records sum-to-one, subordination, and the smallness of the
// boundary region at horizon N.
LsbpResult lsbp_partition(const FunctionSystem& fs, const AdmissibilityGraph& g,
                          const SigmaGenerator& sigma, const std::vector<ShrunkPair>& pairs,
                          double eps, int N, double delta);

struct T2Result {
  std::vector<int> carrier;
  std::vector<int> labels;          // fiber ids of f_N on the carrier
  Cover window_cover;               // alpha_0^{N-1}(sigma) for alpha = {U_j}
  CompatibilityVerdict verdict;
  std::vector<int> open_coordinates;  // per carrier point
  long long budget = 0;               // eps * N * |alpha|
  bool within_budget = false;
  std::vector<std::string> notes;
};

// f_N(x) = (Phi(x), Phi(v^{sigma(1)}x), ..., Phi(v^{sigma(N-1)}x)) checked
// for compatibility with the window cover; open coordinates are the values
// strictly inside (0,1).
T2Result t2_map(const FunctionSystem& fs, const SigmaGenerator& sigma,
                const PartitionOfUnity& partition, const std::vector<ShrunkPair>& pairs, int N,
                double eps);

}  // namespace meandim
