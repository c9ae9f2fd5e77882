#pragma once

#include <string>
#include <vector>

#include "meandim/counting.hpp"

namespace meandim {

struct EpsRate {
  double eps = 0.0;
  double rate = 0.0;          // least-squares slope of log count vs n
  double per_log_eps = 0.0;   // rate / |log eps|
  bool exact_counts = false;  // all fitted entries were exact
  double max_residual = 0.0;
};

struct RateReport {
  std::vector<EpsRate> per_eps;   // ordered by decreasing eps
  double entropy = 0.0;           // max rate over the eps grid
  double umdim = 0.0;             // max of per_log_eps over the two smallest eps
  double lmdim = 0.0;             // min of per_log_eps over the two smallest eps
  int fit_tail = 2;               // horizons used per fit (largest ones)
  std::vector<std::string> flags;
};

// Which count column of a grid feeds the fit.
enum class CountSource { Separated, Spanning };

// Slope fits over the largest horizons of the grid. Throws
// std::invalid_argument with fewer than 2 horizons.
RateReport rates_from_grid(const CountGrid& grid, CountSource source = CountSource::Separated);

// Convenience wrappers matching the CLI surface: build the grid, then fit.
RateReport entropy_estimate(const FunctionSystem& fs, const AdmissibilityGraph& g,
                            const std::vector<int>& n_grid, const std::vector<double>& eps_grid,
                            const CountOptions& options = {});

// Additionally requires the eps grid to span at least three dyadic scales
// and stay below 1.
RateReport mmdim_estimate(const FunctionSystem& fs, const AdmissibilityGraph& g,
                          const std::vector<int>& n_grid, const std::vector<double>& eps_grid,
                          const CountOptions& options = {});

struct SigmaRate {
  std::string name;
  RateReport report;
  double omdim = 0.0;  // min of per_log_eps over the two smallest eps for this sigma
};

struct OmdimReport {
  std::vector<SigmaRate> per_sigma;
  double omdim = 0.0;  // max over the sampled sigmas
};

OmdimReport omdim_estimate(const FunctionSystem& fs, const AdmissibilityGraph& g,
                           const std::vector<std::pair<std::string, SigmaGenerator>>& sigmas,
                           const std::vector<int>& n_grid, const std::vector<double>& eps_grid,
                           const CountOptions& options = {});

}  // namespace meandim
