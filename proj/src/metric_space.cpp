#include "meandim/metric_space.hpp"

#include <algorithm>
#include <stdexcept>

#include "meandim/tolerance.hpp"

namespace meandim {

int MetricSpaceModel::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels[i] == label) return i;
  return -1;
}

double MetricSpaceModel::diameter() const {
  double d = 0.0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) d = std::max(d, dist(i, j));
  return d;
}

std::vector<double> MetricSpaceModel::distance_values() const {
  std::vector<double> vals;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) vals.push_back(dist(i, j));
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end(),
                         [](double a, double b) { return approx_eq(a, b); }),
             vals.end());
  return vals;
}

std::vector<int> MetricSpaceModel::ball(int x, double r) const {
  std::vector<int> pts;
  for (int i = 0; i < size(); ++i)
    if (within_radius(dist(x, i), r)) pts.push_back(i);
  return pts;
}

MetricSpaceModel MetricSpaceModel::from_matrix(std::vector<std::string> labels,
                                               const std::vector<std::vector<double>>& matrix,
                                               double resolution) {
  MetricSpaceModel m;
  m.labels = std::move(labels);
  const size_t n = m.labels.size();
  if (matrix.size() != n)
    throw std::invalid_argument("metric matrix size does not match point count");
  m.distances.assign(n * n, 0.0);
  for (size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n)
      throw std::invalid_argument("metric matrix is not square");
    for (size_t j = 0; j < n; ++j) m.distances[i * n + j] = matrix[i][j];
  }
  m.resolution = resolution;
  return m;
}

std::string MetricViolation::describe(const MetricSpaceModel& m) const {
  auto name = [&](int p) { return p >= 0 ? m.labels[p] : std::string("?"); };
  switch (kind) {
    case Kind::Diagonal:
      return "d(" + name(i) + "," + name(i) + ") != 0";
    case Kind::Symmetry:
      return "d(" + name(i) + "," + name(j) + ") != d(" + name(j) + "," + name(i) + ")";
    case Kind::Positivity:
      return "d(" + name(i) + "," + name(j) + ") <= 0 for distinct points";
    case Kind::Triangle:
      return "d(" + name(i) + "," + name(k) + ") > d(" + name(i) + "," + name(j) + ") + d(" +
             name(j) + "," + name(k) + ")";
  }
  return "unknown violation";
}

std::vector<MetricViolation> verify_metric(const MetricSpaceModel& m) {
  std::vector<MetricViolation> out;
  const int n = m.size();
  for (int i = 0; i < n; ++i)
    if (!approx_eq(m.dist(i, i), 0.0))
      out.push_back({MetricViolation::Kind::Diagonal, i, i, -1});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!approx_eq(m.dist(i, j), m.dist(j, i)))
        out.push_back({MetricViolation::Kind::Symmetry, i, j, -1});
      if (m.dist(i, j) <= kDistanceTol || m.dist(j, i) <= kDistanceTol)
        out.push_back({MetricViolation::Kind::Positivity, i, j, -1});
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (m.dist(i, k) > m.dist(i, j) + m.dist(j, k) + kDistanceTol)
          out.push_back({MetricViolation::Kind::Triangle, i, j, k});
  return out;
}

double hausdorff_distance(const MetricSpaceModel& m, const std::vector<int>& A,
                          const std::vector<int>& B) {
  if (A.empty() || B.empty())
    throw std::invalid_argument("hausdorff_distance: empty subset");
  double result = 0.0;
  for (int a : A) {
    double nearest = m.dist(a, B[0]);
    for (int b : B) nearest = std::min(nearest, m.dist(a, b));
    result = std::max(result, nearest);
  }
  for (int b : B) {
    double nearest = m.dist(A[0], b);
    for (int a : A) nearest = std::min(nearest, m.dist(a, b));
    result = std::max(result, nearest);
  }
  return result;
}

}  // namespace meandim
