#include "meandim/rate_report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "meandim/tolerance.hpp"

namespace meandim {

namespace {

struct FitPoint {
  int n;
  double log_count;
  bool exact;
};

// least squares slope over the fitted points
std::pair<double, double> ls_slope(const std::vector<FitPoint>& pts) {
  const double m = static_cast<double>(pts.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : pts) {
    sx += p.n;
    sy += p.log_count;
    sxx += static_cast<double>(p.n) * p.n;
    sxy += p.n * p.log_count;
  }
  const double denom = m * sxx - sx * sx;
  const double slope = denom == 0.0 ? 0.0 : (m * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / m;
  return {slope, intercept};
}

}  // namespace

RateReport rates_from_grid(const CountGrid& grid, CountSource source) {
  if (grid.n_grid.size() < 2)
    throw std::invalid_argument("rate fit needs at least 2 horizons");
  RateReport report;
  // Fit over the largest horizons: the upper half of the grid, at least two.
  const int tail = std::max<int>(2, static_cast<int>(grid.n_grid.size()) / 2);
  report.fit_tail = tail;

  std::vector<size_t> order_n(grid.n_grid.size());
  for (size_t i = 0; i < order_n.size(); ++i) order_n[i] = i;
  std::sort(order_n.begin(), order_n.end(),
            [&](size_t a, size_t b) { return grid.n_grid[a] < grid.n_grid[b]; });

  std::vector<size_t> order_eps(grid.eps_grid.size());
  for (size_t i = 0; i < order_eps.size(); ++i) order_eps[i] = i;
  std::sort(order_eps.begin(), order_eps.end(),
            [&](size_t a, size_t b) { return grid.eps_grid[a] > grid.eps_grid[b]; });

  for (size_t ei : order_eps) {
    EpsRate er;
    er.eps = grid.eps_grid[ei];
    std::vector<FitPoint> pts;
    bool all_exact = true;
    for (size_t k = order_n.size() - tail; k < order_n.size(); ++k) {
      const auto& e = grid.at(static_cast<int>(order_n[k]), static_cast<int>(ei));
      long long count;
      bool exact;
      if (source == CountSource::Separated) {
        count = e.separated_exact ? *e.separated_exact : e.separated_lb;
        exact = e.separated_exact.has_value();
      } else {
        count = e.spanning_exact ? *e.spanning_exact : e.spanning_ub;
        exact = e.spanning_exact.has_value();
      }
      if (count <= 0) {
        all_exact = false;
        continue;
      }
      pts.push_back({e.n, std::log(static_cast<double>(count)), exact});
      all_exact = all_exact && exact;
    }
    if (pts.size() < 2) {
      report.flags.push_back("insufficient counts at eps=" + std::to_string(er.eps));
      er.rate = 0.0;
    } else {
      auto [slope, intercept] = ls_slope(pts);
      er.rate = slope;
      for (const auto& p : pts)
        er.max_residual =
            std::max(er.max_residual, std::fabs(p.log_count - (slope * p.n + intercept)));
    }
    er.exact_counts = all_exact;
    er.per_log_eps = er.eps < 1.0 ? er.rate / std::fabs(std::log(er.eps)) : 0.0;
    report.per_eps.push_back(er);
  }

  report.entropy = 0.0;
  for (const auto& er : report.per_eps) report.entropy = std::max(report.entropy, er.rate);

  // limsup/liminf over eps -> 0 proxied by the two smallest grid radii
  const size_t k = report.per_eps.size();
  const size_t lo = k >= 2 ? k - 2 : 0;
  report.umdim = report.lmdim = report.per_eps.empty() ? 0.0 : report.per_eps[lo].per_log_eps;
  for (size_t i = lo; i < k; ++i) {
    report.umdim = std::max(report.umdim, report.per_eps[i].per_log_eps);
    report.lmdim = std::min(report.lmdim, report.per_eps[i].per_log_eps);
  }
  return report;
}

RateReport entropy_estimate(const FunctionSystem& fs, const AdmissibilityGraph& g,
                            const std::vector<int>& n_grid, const std::vector<double>& eps_grid,
                            const CountOptions& options) {
  if (n_grid.size() < 2 || eps_grid.empty())
    throw std::invalid_argument("entropy_estimate: need >= 2 horizons and a nonempty eps grid");
  const CountGrid grid = build_count_grid(fs, g, n_grid, eps_grid, options);
  return rates_from_grid(grid, CountSource::Separated);
}

RateReport mmdim_estimate(const FunctionSystem& fs, const AdmissibilityGraph& g,
                          const std::vector<int>& n_grid, const std::vector<double>& eps_grid,
                          const CountOptions& options) {
  if (n_grid.size() < 2) throw std::invalid_argument("mmdim_estimate: need >= 2 horizons");
  if (eps_grid.size() < 3)
    throw std::invalid_argument("mmdim_estimate: eps grid must span >= 3 dyadic scales");
  const auto [lo, hi] = std::minmax_element(eps_grid.begin(), eps_grid.end());
  if (*hi >= 1.0 || *hi / *lo < 4.0 - kDistanceTol)
    throw std::invalid_argument("mmdim_estimate: eps grid must lie below 1 and span >= 3 dyadic scales");
  const CountGrid grid = build_count_grid(fs, g, n_grid, eps_grid, options);
  return rates_from_grid(grid, CountSource::Separated);
}

OmdimReport omdim_estimate(const FunctionSystem& fs, const AdmissibilityGraph& g,
                           const std::vector<std::pair<std::string, SigmaGenerator>>& sigmas,
                           const std::vector<int>& n_grid, const std::vector<double>& eps_grid,
                           const CountOptions& options) {
  OmdimReport report;
  for (const auto& [name, sigma] : sigmas) {
    const CountGrid grid = build_count_grid(fs, g, n_grid, eps_grid, options, &sigma);
    SigmaRate sr;
    sr.name = name;
    sr.report = rates_from_grid(grid, CountSource::Separated);
    sr.omdim = sr.report.lmdim;  // liminf proxy along this sigma
    report.per_sigma.push_back(std::move(sr));
  }
  report.omdim = 0.0;
  for (const auto& sr : report.per_sigma) report.omdim = std::max(report.omdim, sr.omdim);
  return report;
}

}  // namespace meandim
