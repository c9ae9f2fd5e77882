#pragma once

#include <string>
#include <vector>

#include "meandim/metric_space.hpp"

namespace meandim {

// Injection of an input model's points into a glued model, isometric onto
// its image.
struct Embedding {
  std::vector<int> to_glued;
};

struct Realization {
  MetricSpaceModel glued;
  Embedding left;
  Embedding right;
  double achieved_hausdorff = 0.0;
  bool optimal = true;
};

struct GhOptions {
  // Exact correspondence search is exponential; beyond this combined point
  // count only bounds are produced.
  int max_exact_points = 8;
};

struct GhResult {
  double lower = 0.0;
  double upper = 0.0;
  bool exact = false;
  std::string flag;  // "bounds-only" when the exact search was skipped
  Realization realization;

  double value() const { return upper; }
};

// Exact Gromov-Hausdorff distance for small models (exhaustive search over
// correspondences generated by function pairs), bounds plus a greedy
// realization otherwise. Ties between optimal correspondences are broken by
// lexicographic order on point indices.
GhResult gh_distance(const MetricSpaceModel& m1, const MetricSpaceModel& m2,
                     const GhOptions& options = {});

struct GluedStack {
  MetricSpaceModel glued;
  std::vector<Embedding> embeddings;  // one per input model
  bool optimal = true;
};

// Left-to-right iterative gluing via gh_distance realizations.
GluedStack glue_realization(const std::vector<MetricSpaceModel>& models,
                            const GhOptions& options = {});

}  // namespace meandim
