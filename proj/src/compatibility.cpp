#include "meandim/compatibility.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "meandim/orbit.hpp"
#include "meandim/tolerance.hpp"

namespace meandim {

CompatibilityVerdict fibers_compatible(const std::vector<int>& labels, const Cover& alpha) {
  if (labels.size() != alpha.carrier.size())
    throw std::invalid_argument("fibers_compatible: labels must align with carrier");
  std::map<int, std::vector<int>> fibers;
  for (size_t i = 0; i < labels.size(); ++i) fibers[labels[i]].push_back(alpha.carrier[i]);

  CompatibilityVerdict verdict;
  for (const auto& [label, fiber] : fibers) {
    bool inside = false;
    for (const auto& e : alpha.elements)
      if (std::includes(e.points.begin(), e.points.end(), fiber.begin(), fiber.end())) {
        inside = true;
        break;
      }
    if (!inside) {
      verdict.compatible = false;
      verdict.violating_fiber = fiber;
      verdict.violating_label = std::to_string(label);
      return verdict;
    }
  }
  verdict.compatible = true;
  return verdict;
}

namespace {

double dist_to_set(const MetricSpaceModel& space, int x, const std::vector<char>& in_set) {
  double best = std::numeric_limits<double>::infinity();
  for (int y = 0; y < space.size(); ++y)
    if (in_set[y]) best = std::min(best, space.dist(x, y));
  return best;
}

}  // namespace

FSigmaResult f_sigma_map(const FunctionSystem& fs, const SigmaGenerator& sigma, int N,
                         const std::vector<PairCover>& pairs) {
  if (N < 1) throw std::invalid_argument("f_sigma_map: N must be >= 1");
  if (pairs.empty()) throw std::invalid_argument("f_sigma_map: no pairs given");
  FSigmaResult result;
  result.convention_note = "F blocks run over steps 0..N-1, matching the window cover";
  const int size = fs.space.size();
  const int r = static_cast<int>(pairs.size());

  result.carrier = sigma_sigma_stable(fs, sigma);

  // w_i on the ambient points; degenerate pairs are reported, not evaluated.
  result.w.assign(r, std::vector<double>(size, 0.0));
  for (int i = 0; i < r; ++i) {
    std::vector<char> in_U(size, 0), in_V(size, 0);
    for (int p : pairs[i].U) in_U[p] = 1;
    for (int p : pairs[i].V) in_V[p] = 1;
    std::vector<char> comp_U(size), comp_V(size);
    bool comp_U_empty = true, comp_V_empty = true;
    for (int p = 0; p < size; ++p) {
      comp_U[p] = !in_U[p];
      comp_V[p] = !in_V[p];
      comp_U_empty = comp_U_empty && in_U[p];
      comp_V_empty = comp_V_empty && in_V[p];
    }
    if (comp_U_empty || comp_V_empty) {
      result.cover_defect = true;
      result.defects.push_back("pair " + std::to_string(i + 1) +
                               ": degenerate (an element equals the full space)");
      continue;
    }
    for (int p = 0; p < size; ++p) {
      if (comp_U[p] && comp_V[p]) {
        result.cover_defect = true;
        result.defects.push_back("pair " + std::to_string(i + 1) + ": point " +
                                 fs.space.labels[p] + " covered by neither element");
        break;
      }
      const double dv = dist_to_set(fs.space, p, comp_V);
      const double du = dist_to_set(fs.space, p, comp_U);
      result.w[i][p] = dv / (dv + du);
    }
    if (result.cover_defect) continue;
    // endpoint identities: U = {w < 1}, V = {w > 0}
    for (int p = 0; p < size; ++p) {
      const bool in_u = in_U[p], in_v = in_V[p];
      const bool w_lt1 = result.w[i][p] < 1.0 - kDistanceTol;
      const bool w_gt0 = result.w[i][p] > kDistanceTol;
      if (in_u != w_lt1 || in_v != w_gt0) result.endpoints_ok = false;
    }
  }
  if (result.cover_defect) return result;

  // orbit of each carrier point through N-1 steps
  std::vector<std::vector<int>> orbits;
  for (int x : result.carrier) {
    std::vector<int> orbit{x};
    int p = x;
    for (int t = 1; t < N; ++t) {
      p = fs.maps[sigma.symbol(t)].apply(p);
      orbit.push_back(p);
    }
    orbits.push_back(std::move(orbit));
  }

  result.values.assign(result.carrier.size(), std::vector<double>());
  for (size_t c = 0; c < result.carrier.size(); ++c) {
    auto& vec = result.values[c];
    vec.reserve(static_cast<size_t>(r) * N);
    for (int t = 0; t < N; ++t)
      for (int i = 0; i < r; ++i) vec.push_back(result.w[i][orbits[c][t]]);
  }

  // fibers by exact vector equality (finer fibers only make the sufficient
  // condition harder, never unsound)
  std::map<std::vector<double>, int> fiber_id;
  result.labels.resize(result.carrier.size());
  for (size_t c = 0; c < result.carrier.size(); ++c) {
    auto [it, fresh] = fiber_id.insert({result.values[c], static_cast<int>(fiber_id.size())});
    result.labels[c] = it->second;
  }

  // base cover alpha = join of the two-element covers, on the carrier
  Cover base;
  base.carrier = result.carrier;
  bool first = true;
  for (int i = 0; i < r; ++i) {
    Cover pair_cover;
    pair_cover.carrier = result.carrier;
    CoverElement u{"U" + std::to_string(i + 1), pairs[i].U};
    CoverElement v{"V" + std::to_string(i + 1), pairs[i].V};
    pair_cover.elements = {u, v};
    pair_cover = restrict_cover(pair_cover, result.carrier);
    base = first ? pair_cover : join(base, pair_cover);
    first = false;
  }

  result.window_cover = alpha_window(fs, sigma, 0, N - 1, base);
  if (result.window_cover.carrier != result.carrier) {
    // carrier can only shrink if some orbit leaves the base cover; restrict
    // labels accordingly
    std::vector<int> labels;
    for (size_t c = 0; c < result.carrier.size(); ++c)
      if (std::binary_search(result.window_cover.carrier.begin(),
                             result.window_cover.carrier.end(), result.carrier[c]))
        labels.push_back(result.labels[c]);
    result.verdict = fibers_compatible(labels, result.window_cover);
  } else {
    result.verdict = fibers_compatible(result.labels, result.window_cover);
  }
  return result;
}

}  // namespace meandim
