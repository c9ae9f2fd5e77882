#pragma once

#include <string>
#include <vector>

#include "meandim/counting.hpp"
#include "meandim/function_system.hpp"
#include "meandim/sigma.hpp"

namespace meandim {

struct CoverElement {
  std::string label;
  std::vector<int> points;  // sorted ascending
};

// Finite cover of a carrier subset. Normalization drops empty elements and
// merges duplicate point sets (first label wins).
struct Cover {
  std::vector<CoverElement> elements;
  std::vector<int> carrier;  // sorted ascending

  void normalize();
  bool covers_carrier() const;
  double max_element_diameter(const MetricSpaceModel& space) const;

  // Elements as a canonical set-of-sets (labels ignored), for exact
  // set-family comparisons.
  std::vector<std::vector<int>> element_family() const;

  static Cover of_elements(std::vector<CoverElement> elements, std::vector<int> carrier);
};

// ord(alpha, A) = max over carrier points of membership multiplicity - 1.
// Throws std::domain_error if some carrier point is uncovered.
int order(const Cover& alpha);

// All nonempty pairwise intersections, labels concatenated. Requires equal
// carriers.
Cover join(const Cover& alpha, const Cover& beta);

// true iff every beta element is contained in some alpha element.
bool refines(const Cover& beta, const Cover& alpha);

Cover restrict_cover(const Cover& alpha, const std::vector<int>& carrier);

// v^{-sigma(n)} alpha: element-wise preimage under the n-step composition,
// carried on {x : orbit defined through n, v^{sigma(n)}(x) in carrier(alpha)}.
// n = 0 returns alpha.
Cover pullback(const FunctionSystem& fs, const SigmaGenerator& sigma, long n, const Cover& alpha);

// alpha_a^b(sigma) = join of the pullbacks over steps a..b on their common
// carrier.
Cover alpha_window(const FunctionSystem& fs, const SigmaGenerator& sigma, long a, long b,
                   const Cover& alpha);

// Search space for refinement minimization. On a finite model unrestricted
// refinements are trivially disjoint (singletons), so candidates carry a
// diameter floor modeling the continuum obstruction.
struct RefinementPool {
  std::vector<std::vector<int>> candidates;
  double floor = 0.0;
};

// Balls at realized radii, the cover's own elements, and their pairwise
// intersections, filtered by the diameter floor.
RefinementPool default_pool(const MetricSpaceModel& space, const Cover& alpha, double floor);

struct DResult {
  int value = -1;
  Cover witness;
  bool exact = false;
  bool feasible = false;
  std::string flag;
};

// Pool-restricted D(alpha): minimum order over covers assembled from pool
// candidates that refine alpha and cover the carrier. Exact search within
// budget, greedy upper bound otherwise.
DResult refinement_order(const Cover& alpha, const RefinementPool& pool, CountMode mode,
                         long budget = 200000);

struct MdimLevel {
  int k = 0;
  std::vector<int> n_grid;
  std::vector<int> d_values;
  std::vector<bool> exact;
  double slope = 0.0;
};

struct MdimReport {
  std::vector<MdimLevel> levels;
  double estimate = 0.0;  // sup over k of the large-n slope, pool-restricted
  std::vector<std::string> flags;
};

// Ladder covers alpha_k must have max element diameter <= space diameter / k.
MdimReport mdim_estimate(const FunctionSystem& fs, const SigmaGenerator& sigma,
                         const std::vector<Cover>& ladder, const std::vector<int>& n_grid,
                         const std::vector<RefinementPool>& pools, CountMode mode,
                         long budget = 200000);

}  // namespace meandim
