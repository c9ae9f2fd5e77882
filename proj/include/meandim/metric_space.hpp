#pragma once

#include <optional>
#include <string>
#include <vector>

namespace meandim {

// Finite point-set model of a compact metric space at a declared resolution.
// Immutable after construction; all operations on it are pure.
struct MetricSpaceModel {
  std::vector<std::string> labels;
  std::vector<double> distances;  // row-major size() x size()
  double resolution = 1.0;

  int size() const { return static_cast<int>(labels.size()); }

  double dist(int i, int j) const { return distances[static_cast<size_t>(i) * labels.size() + j]; }

  void set_dist(int i, int j, double d) {
    distances[static_cast<size_t>(i) * labels.size() + j] = d;
    distances[static_cast<size_t>(j) * labels.size() + i] = d;
  }

  int index_of(const std::string& label) const;
  double diameter() const;

  // Distinct nonzero distance values, ascending. Candidate radii for
  // modulus/shell searches.
  std::vector<double> distance_values() const;

  // Points within radius r of point x (strict, tolerance-aware), including x.
  std::vector<int> ball(int x, double r) const;

  static MetricSpaceModel from_matrix(std::vector<std::string> labels,
                                      const std::vector<std::vector<double>>& matrix,
                                      double resolution);
};

struct MetricViolation {
  enum class Kind { Diagonal, Symmetry, Positivity, Triangle };
  Kind kind;
  int i = -1, j = -1, k = -1;
  std::string describe(const MetricSpaceModel& m) const;
};

// Empty result iff all metric axioms hold on every pair/triple.
// Violations are data, not failures.
std::vector<MetricViolation> verify_metric(const MetricSpaceModel& m);

// max(sup_{a in A} inf_{b in B} d(a,b), sup_{b in B} inf_{a in A} d(a,b)).
// Throws std::invalid_argument if A or B is empty.
double hausdorff_distance(const MetricSpaceModel& m, const std::vector<int>& A,
                          const std::vector<int>& B);

}  // namespace meandim
