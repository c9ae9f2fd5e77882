#include "meandim/gromov_hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "meandim/tolerance.hpp"

namespace meandim {

namespace {

using Pairs = std::vector<std::pair<int, int>>;

double distortion(const MetricSpaceModel& m1, const MetricSpaceModel& m2, const Pairs& rel) {
  double dis = 0.0;
  for (size_t a = 0; a < rel.size(); ++a)
    for (size_t b = a + 1; b < rel.size(); ++b) {
      const double dx = m1.dist(rel[a].first, rel[b].first);
      const double dy = m2.dist(rel[a].second, rel[b].second);
      dis = std::max(dis, std::fabs(dx - dy));
    }
  return dis;
}

Pairs relation_of(const std::vector<int>& f, const std::vector<int>& g) {
  Pairs rel;
  rel.reserve(f.size() + g.size());
  for (int x = 0; x < static_cast<int>(f.size()); ++x) rel.push_back({x, f[x]});
  for (int y = 0; y < static_cast<int>(g.size()); ++y) rel.push_back({g[y], y});
  std::sort(rel.begin(), rel.end());
  rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
  return rel;
}

bool next_assignment(std::vector<int>& f, int range) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (++f[i] < range) return true;
    f[i] = 0;
  }
  return false;
}

// Every correspondence contains graph(f) union graph(g)^T for some choice of
// f and g, and distortion is monotone under inclusion, so minimizing over
// function pairs is exact.
std::pair<double, Pairs> exact_search(const MetricSpaceModel& m1, const MetricSpaceModel& m2) {
  std::vector<int> f(m1.size(), 0);
  double best = -1.0;
  Pairs best_rel;
  do {
    std::vector<int> g(m2.size(), 0);
    do {
      Pairs rel = relation_of(f, g);
      const double dis = distortion(m1, m2, rel);
      if (best < 0.0 || dis < best - kDistanceTol) {
        best = dis;
        best_rel = rel;
      }
    } while (next_assignment(g, m1.size()));
  } while (next_assignment(f, m2.size()));
  return {best, best_rel};
}

std::pair<double, Pairs> greedy_search(const MetricSpaceModel& m1, const MetricSpaceModel& m2) {
  std::vector<int> f(m1.size(), -1), g(m2.size(), -1);
  for (int x = 0; x < m1.size(); ++x) {
    double best = -1.0;
    for (int y = 0; y < m2.size(); ++y) {
      double dis = 0.0;
      for (int x2 = 0; x2 < x; ++x2)
        dis = std::max(dis, std::fabs(m1.dist(x, x2) - m2.dist(y, f[x2])));
      if (best < 0.0 || dis < best - kDistanceTol) {
        best = dis;
        f[x] = y;
      }
    }
  }
  for (int y = 0; y < m2.size(); ++y) {
    double best = -1.0;
    for (int x = 0; x < m1.size(); ++x) {
      double dis = 0.0;
      for (int x2 = 0; x2 < m1.size(); ++x2)
        dis = std::max(dis, std::fabs(m1.dist(x, x2) - m2.dist(y, f[x2])));
      if (best < 0.0 || dis < best - kDistanceTol) {
        best = dis;
        g[y] = x;
      }
    }
  }
  Pairs rel = relation_of(f, g);
  return {distortion(m1, m2, rel), rel};
}

std::string fresh_label(std::vector<std::string>& taken, std::string candidate) {
  while (std::find(taken.begin(), taken.end(), candidate) != taken.end()) candidate += "'";
  taken.push_back(candidate);
  return candidate;
}

// Standard glued semi-metric on the disjoint union: cross distances
// min over related pairs of d1(x,x') + r + d2(y',y) with r = dis/2.
// Zero-distance cross pairs (r == 0) are identified.
Realization build_realization(const MetricSpaceModel& m1, const MetricSpaceModel& m2,
                              const Pairs& rel, double r, bool optimal) {
  const int n1 = m1.size(), n2 = m2.size();
  const int total = n1 + n2;
  std::vector<double> cross(static_cast<size_t>(n1) * n2, 0.0);
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n2; ++y) {
      double best = -1.0;
      for (const auto& [xr, yr] : rel) {
        const double d = m1.dist(x, xr) + r + m2.dist(yr, y);
        if (best < 0.0 || d < best) best = d;
      }
      cross[static_cast<size_t>(x) * n2 + y] = best;
    }

  // Union-find over the disjoint union; merges only happen at r == 0.
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n2; ++y)
      if (cross[static_cast<size_t>(x) * n2 + y] <= kDistanceTol) {
        const int a = find(x), b = find(n1 + y);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }

  std::vector<int> glued_index(total, -1);
  Realization out;
  out.optimal = optimal;
  std::vector<std::string> taken;
  auto raw_dist = [&](int a, int b) {
    if (a < n1 && b < n1) return m1.dist(a, b);
    if (a >= n1 && b >= n1) return m2.dist(a - n1, b - n1);
    if (a < n1) return cross[static_cast<size_t>(a) * n2 + (b - n1)];
    return cross[static_cast<size_t>(b) * n2 + (a - n1)];
  };
  for (int v = 0; v < total; ++v) {
    const int root = find(v);
    if (glued_index[root] < 0) {
      glued_index[root] = static_cast<int>(out.glued.labels.size());
      const std::string base = root < n1 ? m1.labels[root] : m2.labels[root - n1];
      out.glued.labels.push_back(fresh_label(taken, base));
    }
    glued_index[v] = glued_index[root];
  }
  const int g = static_cast<int>(out.glued.labels.size());
  out.glued.distances.assign(static_cast<size_t>(g) * g, 0.0);
  out.glued.resolution = std::min(m1.resolution, m2.resolution);
  for (int a = 0; a < total; ++a)
    for (int b = 0; b < total; ++b)
      if (glued_index[a] != glued_index[b])
        out.glued.set_dist(glued_index[a], glued_index[b], raw_dist(a, b));

  out.left.to_glued.resize(n1);
  for (int x = 0; x < n1; ++x) out.left.to_glued[x] = glued_index[x];
  out.right.to_glued.resize(n2);
  for (int y = 0; y < n2; ++y) out.right.to_glued[y] = glued_index[n1 + y];

  std::vector<int> imgA = out.left.to_glued, imgB = out.right.to_glued;
  out.achieved_hausdorff = hausdorff_distance(out.glued, imgA, imgB);
  return out;
}

}  // namespace

GhResult gh_distance(const MetricSpaceModel& m1, const MetricSpaceModel& m2,
                     const GhOptions& options) {
  if (m1.size() == 0 || m2.size() == 0)
    throw std::invalid_argument("gh_distance: empty model");
  if (!verify_metric(m1).empty() || !verify_metric(m2).empty())
    throw std::invalid_argument("gh_distance: input fails metric axioms");

  GhResult result;
  const double diam_gap = std::fabs(m1.diameter() - m2.diameter()) / 2.0;
  if (m1.size() + m2.size() <= options.max_exact_points) {
    auto [dis, rel] = exact_search(m1, m2);
    result.lower = result.upper = dis / 2.0;
    result.exact = true;
    result.realization = build_realization(m1, m2, rel, dis / 2.0, true);
  } else {
    auto [dis, rel] = greedy_search(m1, m2);
    result.lower = diam_gap;
    result.upper = dis / 2.0;
    result.exact = false;
    result.flag = "bounds-only";
    result.realization = build_realization(m1, m2, rel, dis / 2.0, false);
  }
  return result;
}

GluedStack glue_realization(const std::vector<MetricSpaceModel>& models,
                            const GhOptions& options) {
  if (models.empty()) throw std::invalid_argument("glue_realization: no models");
  GluedStack stack;
  stack.glued = models[0];
  stack.embeddings.resize(1);
  stack.embeddings[0].to_glued.resize(models[0].size());
  std::iota(stack.embeddings[0].to_glued.begin(), stack.embeddings[0].to_glued.end(), 0);

  for (size_t k = 1; k < models.size(); ++k) {
    GhResult step = gh_distance(stack.glued, models[k], options);
    stack.optimal = stack.optimal && step.exact;
    for (auto& emb : stack.embeddings)
      for (int& idx : emb.to_glued) idx = step.realization.left.to_glued[idx];
    stack.embeddings.push_back(step.realization.right);
    stack.glued = std::move(step.realization.glued);
  }
  return stack;
}

}  // namespace meandim
