#include "meandim/partition_unity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "meandim/orbit.hpp"
#include "meandim/tolerance.hpp"

namespace meandim {

namespace {

std::vector<char> indicator(int size, const std::vector<int>& pts) {
  std::vector<char> in(size, 0);
  for (int p : pts) in[p] = 1;
  return in;
}

double dist_to_points(const MetricSpaceModel& space, int x, const std::vector<int>& pts) {
  double best = -1.0;
  for (int p : pts) {
    const double d = space.dist(x, p);
    if (best < 0 || d < best) best = d;
  }
  return best;  // -1 when pts empty
}

}  // namespace

LsbpResult lsbp_partition(const FunctionSystem& fs, const AdmissibilityGraph& g,
                          const SigmaGenerator& sigma, const std::vector<ShrunkPair>& pairs,
                          double eps, int N, double delta) {
  if (pairs.empty()) throw std::invalid_argument("lsbp_partition: no pairs");
  if (N < 1 || delta <= 0.0 || eps <= 0.0)
    throw std::invalid_argument("lsbp_partition: need N >= 1, delta > 0, eps > 0");

  LsbpResult result;
  result.delta = delta;
  result.horizon = N;
  result.eps = eps;
  const int size = fs.space.size();
  const int r = static_cast<int>(pairs.size());
  auto& cert = result.certificate;
  cert.premises_ok = true;

  result.partition.carrier = sigma_sigma_stable(fs, sigma);
  if (result.partition.carrier.empty()) {
    cert.premises_ok = false;
    cert.premise_failures.push_back("sigma survivor set is empty");
    return result;
  }

  // premise: closure(V_j) = V_j inside U_j; {V_j} covers the ambient points
  // visited by carrier orbits
  for (int j = 0; j < r; ++j) {
    const auto in_U = indicator(size, pairs[j].U);
    for (int p : pairs[j].V)
      if (!in_U[p]) {
        cert.premises_ok = false;
        cert.premise_failures.push_back("V_" + std::to_string(j + 1) + " not inside U_" +
                                        std::to_string(j + 1) + " at " + fs.space.labels[p]);
      }
  }

  // shell boundary of each V_j at the model resolution, then the delta
  // neighborhood B_{delta,j}
  std::vector<std::vector<int>> boundary(r), B(r);
  for (int j = 0; j < r; ++j) {
    boundary[j] = delta_shell(fs.space, pairs[j].V, fs.space.resolution);
    for (int y = 0; y < size; ++y) {
      const double d = dist_to_points(fs.space, y, boundary[j]);
      if (d >= 0 && within_radius(d, delta)) B[j].push_back(y);
    }
    const auto in_U = indicator(size, pairs[j].U);
    for (int p : B[j])
      if (!in_U[p]) {
        cert.premises_ok = false;
        cert.premise_failures.push_back("B_delta," + std::to_string(j + 1) + " leaves U_" +
                                        std::to_string(j + 1) + " at " + fs.space.labels[p]);
      }
  }

  // visit-frequency premise along carrier orbits
  for (int x : result.partition.carrier) {
    std::vector<int> orbit{x};
    int p = x;
    for (int t = 1; t < N; ++t) {
      p = fs.maps[sigma.symbol(t)].apply(p);
      orbit.push_back(p);
    }
    for (int j = 0; j < r; ++j) {
      const auto in_B = indicator(size, B[j]);
      int visits = 0;
      for (int q : orbit) visits += in_B[q];
      if (static_cast<double>(visits) / N >= eps / r) {
        cert.premises_ok = false;
        cert.premise_failures.push_back("visit frequency premise fails at x=" +
                                        fs.space.labels[x] + ", j=" + std::to_string(j + 1));
      }
    }
  }

  // psi_j = 1 on V_j, max(0, 1 - d(x, boundary_j)/delta) elsewhere;
  // phi_1 = psi_1, phi_{i+1} = min(psi_{i+1}, 1 - sum phi_l)
  std::vector<std::vector<double>> psi(r, std::vector<double>(size, 0.0));
  for (int j = 0; j < r; ++j) {
    const auto in_V = indicator(size, pairs[j].V);
    for (int x = 0; x < size; ++x) {
      if (in_V[x]) {
        psi[j][x] = 1.0;
      } else {
        const double d = dist_to_points(fs.space, x, boundary[j]);
        psi[j][x] = d < 0 ? 0.0 : std::max(0.0, 1.0 - d / delta);
      }
    }
  }
  auto& phi = result.partition.phi;
  phi.assign(r, std::vector<double>(size, 0.0));
  for (int x = 0; x < size; ++x) {
    double used = 0.0;
    for (int j = 0; j < r; ++j) {
      phi[j][x] = std::min(psi[j][x], 1.0 - used);
      used += phi[j][x];
    }
  }

  result.partition.support.assign(r, {});
  for (int j = 0; j < r; ++j)
    for (int x = 0; x < size; ++x)
      if (phi[j][x] > kDistanceTol) result.partition.support[j].push_back(x);
  for (int x = 0; x < size; ++x)
    for (int j = 0; j < r; ++j)
      if (phi[j][x] > kDistanceTol && phi[j][x] < 1.0 - kDistanceTol) {
        result.partition.boundary_region.push_back(x);
        break;
      }

  cert.max_sum_error = 0.0;
  for (int x : result.partition.carrier) {
    double sum = 0.0;
    for (int j = 0; j < r; ++j) sum += phi[j][x];
    cert.max_sum_error = std::max(cert.max_sum_error, std::fabs(sum - 1.0));
  }
  cert.subordinate = true;
  for (int j = 0; j < r; ++j) {
    const auto in_U = indicator(size, pairs[j].U);
    for (int p : result.partition.support[j])
      if (!in_U[p]) {
        cert.subordinate = false;
        cert.notes.push_back("support of phi_" + std::to_string(j + 1) + " leaves U_" +
                             std::to_string(j + 1));
        break;
      }
  }

  const auto in_boundary = indicator(size, result.partition.boundary_region);
  cert.boundary_capacity = capacity_sup(fs, g, in_boundary, N);
  cert.boundary_small =
      !cert.boundary_capacity.defined || cert.boundary_capacity.value() < eps - kDistanceTol;
  return result;
}

T2Result t2_map(const FunctionSystem& fs, const SigmaGenerator& sigma,
                const PartitionOfUnity& partition, const std::vector<ShrunkPair>& pairs, int N,
                double eps) {
  if (N < 1) throw std::invalid_argument("t2_map: N must be >= 1");
  T2Result result;
  result.carrier = partition.carrier;
  const int r = static_cast<int>(partition.phi.size());
  result.budget = static_cast<long long>(std::floor(eps * N * r));

  std::vector<std::vector<double>> f_values;
  result.open_coordinates.assign(result.carrier.size(), 0);
  for (size_t c = 0; c < result.carrier.size(); ++c) {
    std::vector<int> orbit{result.carrier[c]};
    int p = result.carrier[c];
    for (int t = 1; t < N; ++t) {
      p = fs.maps[sigma.symbol(t)].apply(p);
      orbit.push_back(p);
    }
    std::vector<double> vec;
    vec.reserve(static_cast<size_t>(r) * N);
    double min_sum = 2.0;
    for (int t = 0; t < N; ++t) {
      double sum = 0.0;
      for (int j = 0; j < r; ++j) {
        const double value = partition.phi[j][orbit[t]];
        vec.push_back(value);
        sum += value;
        if (value > kDistanceTol && value < 1.0 - kDistanceTol)
          ++result.open_coordinates[c];
      }
      min_sum = std::min(min_sum, sum);
    }
    if (min_sum < 1.0 - kDistanceTol)
      result.notes.push_back("partition does not sum to one at a visited point of orbit " +
                             fs.space.labels[result.carrier[c]]);
    f_values.push_back(std::move(vec));
  }

  std::map<std::vector<double>, int> fiber_id;
  result.labels.resize(result.carrier.size());
  for (size_t c = 0; c < result.carrier.size(); ++c)
    result.labels[c] = fiber_id.insert({f_values[c], static_cast<int>(fiber_id.size())}).first->second;

  Cover alpha;
  alpha.carrier = result.carrier;
  for (size_t j = 0; j < pairs.size(); ++j)
    alpha.elements.push_back({"U" + std::to_string(j + 1), pairs[j].U});
  alpha = restrict_cover(alpha, result.carrier);
  result.window_cover = alpha_window(fs, sigma, 0, N - 1, alpha);
  if (result.window_cover.carrier == result.carrier) {
    result.verdict = fibers_compatible(result.labels, result.window_cover);
  } else {
    std::vector<int> labels;
    for (size_t c = 0; c < result.carrier.size(); ++c)
      if (std::binary_search(result.window_cover.carrier.begin(),
                             result.window_cover.carrier.end(), result.carrier[c]))
        labels.push_back(result.labels[c]);
    result.verdict = fibers_compatible(labels, result.window_cover);
  }

  result.within_budget = true;
  for (size_t c = 0; c < result.carrier.size(); ++c)
    if (!(result.open_coordinates[c] < eps * N * r)) result.within_budget = false;
  return result;
}

}  // namespace meandim
