#pragma once

#include <cmath>

namespace meandim {

// Global comparison tolerance for metric data. Separated/spanning counts are
// discontinuous in the radius, so every strict comparison against a radius
// goes through these helpers with one consistent tie rule.
inline constexpr double kDistanceTol = 1e-9;

inline bool approx_eq(double a, double b, double tol = kDistanceTol) {
  return std::fabs(a - b) <= tol;
}

// d < eps, ties at eps resolved as "not within".
inline bool within_radius(double d, double eps) { return d < eps - kDistanceTol; }

// d >= eps up to tolerance; exact complement of within_radius.
inline bool separated_at(double d, double eps) { return !within_radius(d, eps); }

}  // namespace meandim
