#include "meandim/cover.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "meandim/orbit.hpp"
#include "meandim/tolerance.hpp"

namespace meandim {

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

double set_diameter(const MetricSpaceModel& space, const std::vector<int>& pts) {
  double d = 0.0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, space.dist(pts[i], pts[j]));
  return d;
}

}  // namespace

void Cover::normalize() {
  for (auto& e : elements) {
    std::sort(e.points.begin(), e.points.end());
    e.points.erase(std::unique(e.points.begin(), e.points.end()), e.points.end());
  }
  std::vector<CoverElement> kept;
  std::set<std::vector<int>> seen;
  for (auto& e : elements) {
    if (e.points.empty()) continue;
    if (seen.insert(e.points).second) kept.push_back(std::move(e));
  }
  elements = std::move(kept);
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
}

bool Cover::covers_carrier() const {
  std::set<int> covered;
  for (const auto& e : elements) covered.insert(e.points.begin(), e.points.end());
  for (int p : carrier)
    if (!covered.count(p)) return false;
  return true;
}

double Cover::max_element_diameter(const MetricSpaceModel& space) const {
  double d = 0.0;
  for (const auto& e : elements) d = std::max(d, set_diameter(space, e.points));
  return d;
}

std::vector<std::vector<int>> Cover::element_family() const {
  std::vector<std::vector<int>> family;
  for (const auto& e : elements) family.push_back(e.points);
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

Cover Cover::of_elements(std::vector<CoverElement> elements, std::vector<int> carrier) {
  Cover c;
  c.elements = std::move(elements);
  c.carrier = std::move(carrier);
  c.normalize();
  return c;
}

int order(const Cover& alpha) {
  int best = -1;
  for (int p : alpha.carrier) {
    int multiplicity = 0;
    for (const auto& e : alpha.elements)
      if (std::binary_search(e.points.begin(), e.points.end(), p)) ++multiplicity;
    if (multiplicity == 0)
      throw std::domain_error("order: carrier point uncovered");
    best = std::max(best, multiplicity - 1);
  }
  return best;
}

Cover join(const Cover& alpha, const Cover& beta) {
  if (alpha.carrier != beta.carrier)
    throw std::invalid_argument("join: covers have different carriers");
  Cover out;
  out.carrier = alpha.carrier;
  for (const auto& a : alpha.elements)
    for (const auto& b : beta.elements) {
      std::vector<int> pts = intersect(a.points, b.points);
      if (pts.empty()) continue;
      out.elements.push_back({a.label + "&" + b.label, std::move(pts)});
    }
  out.normalize();
  return out;
}

bool refines(const Cover& beta, const Cover& alpha) {
  for (const auto& b : beta.elements) {
    bool inside = false;
    for (const auto& a : alpha.elements)
      if (subset_of(b.points, a.points)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

Cover restrict_cover(const Cover& alpha, const std::vector<int>& carrier) {
  Cover out;
  out.carrier = carrier;
  for (const auto& e : alpha.elements) out.elements.push_back({e.label, intersect(e.points, carrier)});
  out.normalize();
  return out;
}

Cover pullback(const FunctionSystem& fs, const SigmaGenerator& sigma, long n, const Cover& alpha) {
  if (n == 0) {
    Cover out = alpha;
    out.normalize();
    return out;
  }
  std::set<int> alpha_carrier(alpha.carrier.begin(), alpha.carrier.end());
  std::vector<int> carrier;
  std::vector<int> image;  // aligned with carrier
  for (int x = 0; x < fs.space.size(); ++x) {
    const auto y = evaluate(fs, x, sigma, n);
    if (y && alpha_carrier.count(*y)) {
      carrier.push_back(x);
      image.push_back(*y);
    }
  }
  Cover out;
  out.carrier = carrier;
  for (const auto& e : alpha.elements) {
    CoverElement pre;
    pre.label = "v^-" + std::to_string(n) + "(" + e.label + ")";
    for (size_t i = 0; i < carrier.size(); ++i)
      if (std::binary_search(e.points.begin(), e.points.end(), image[i]))
        pre.points.push_back(carrier[i]);
    out.elements.push_back(std::move(pre));
  }
  out.normalize();
  return out;
}

Cover alpha_window(const FunctionSystem& fs, const SigmaGenerator& sigma, long a, long b,
                   const Cover& alpha) {
  if (a < 0 || b < a) throw std::invalid_argument("alpha_window: requires b >= a >= 0");
  std::vector<Cover> pulls;
  for (long i = a; i <= b; ++i) pulls.push_back(pullback(fs, sigma, i, alpha));
  std::vector<int> common = pulls[0].carrier;
  for (const auto& c : pulls) common = intersect(common, c.carrier);
  Cover acc = restrict_cover(pulls[0], common);
  for (size_t i = 1; i < pulls.size(); ++i) acc = join(acc, restrict_cover(pulls[i], common));
  return acc;
}

RefinementPool default_pool(const MetricSpaceModel& space, const Cover& alpha, double floor) {
  RefinementPool pool;
  pool.floor = floor;
  std::set<std::vector<int>> seen;
  auto add = [&](std::vector<int> pts) {
    if (pts.empty()) return;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (set_diameter(space, pts) + kDistanceTol < floor) return;
    if (seen.insert(pts).second) pool.candidates.push_back(std::move(pts));
  };

  std::vector<double> radii = space.distance_values();
  radii.insert(radii.begin(), 0.0);
  for (int x = 0; x < space.size(); ++x)
    for (double r : radii) {
      std::vector<int> ball;
      for (int y = 0; y < space.size(); ++y)
        if (space.dist(x, y) <= r + kDistanceTol) ball.push_back(y);
      add(std::move(ball));
    }
  for (const auto& e : alpha.elements) add(e.points);
  for (size_t i = 0; i < alpha.elements.size(); ++i)
    for (size_t j = i + 1; j < alpha.elements.size(); ++j)
      add(intersect(alpha.elements[i].points, alpha.elements[j].points));

  std::sort(pool.candidates.begin(), pool.candidates.end());
  return pool;
}

namespace {

struct DSearch {
  const std::vector<std::vector<int>>& candidates;
  const std::vector<int>& carrier;
  const std::vector<int>& last_cover;  // per carrier idx: max candidate index covering it
  long budget;
  bool exhausted = false;
  int best = -1;
  std::vector<int> best_choice;
  std::vector<int> multiplicity;  // per carrier idx
  std::vector<int> chosen;

  int current_order() const {
    int o = 0;
    for (int m : multiplicity) o = std::max(o, m - 1);
    return o;
  }

  void run(size_t idx, int uncovered) {
    if (exhausted) return;
    if (--budget < 0) {
      exhausted = true;
      return;
    }
    if (uncovered == 0) {
      const int o = current_order();
      if (best < 0 || o < best) {
        best = o;
        best_choice = chosen;
      }
      return;
    }
    if (idx == candidates.size()) return;
    // no remaining candidate can cover some uncovered point
    for (size_t c = 0; c < carrier.size(); ++c)
      if (multiplicity[c] == 0 && last_cover[c] < static_cast<int>(idx)) return;
    if (best >= 0 && current_order() >= best) return;  // order only grows

    // include candidates[idx]
    int newly = 0;
    for (size_t c = 0; c < carrier.size(); ++c)
      if (std::binary_search(candidates[idx].begin(), candidates[idx].end(), carrier[c])) {
        if (multiplicity[c] == 0) ++newly;
        ++multiplicity[c];
      }
    chosen.push_back(static_cast<int>(idx));
    if (best < 0 || current_order() < best) run(idx + 1, uncovered - newly);
    chosen.pop_back();
    for (size_t c = 0; c < carrier.size(); ++c)
      if (std::binary_search(candidates[idx].begin(), candidates[idx].end(), carrier[c]))
        --multiplicity[c];
    if (exhausted) return;

    // exclude candidates[idx]
    run(idx + 1, uncovered);
  }
};

// Greedy refinement assembly: maximize fresh coverage, then minimize overlap
// with already covered points; ties broken by candidate index.
std::vector<int> greedy_refinement(const std::vector<std::vector<int>>& candidates,
                                   const std::vector<int>& carrier) {
  std::vector<char> covered(carrier.size(), 0);
  std::map<int, size_t> carrier_pos;
  for (size_t i = 0; i < carrier.size(); ++i) carrier_pos[carrier[i]] = i;
  int uncovered = static_cast<int>(carrier.size());
  std::vector<int> chosen;
  while (uncovered > 0) {
    int best = -1, best_fresh = 0, best_overlap = 0;
    for (int s = 0; s < static_cast<int>(candidates.size()); ++s) {
      int fresh = 0, overlap = 0;
      for (int p : candidates[s]) {
        auto it = carrier_pos.find(p);
        if (it == carrier_pos.end()) continue;
        if (covered[it->second]) ++overlap;
        else ++fresh;
      }
      if (fresh == 0) continue;
      if (best < 0 || fresh > best_fresh || (fresh == best_fresh && overlap < best_overlap)) {
        best = s;
        best_fresh = fresh;
        best_overlap = overlap;
      }
    }
    if (best < 0) return {};  // cannot cover
    chosen.push_back(best);
    for (int p : candidates[best]) {
      auto it = carrier_pos.find(p);
      if (it != carrier_pos.end() && !covered[it->second]) {
        covered[it->second] = 1;
        --uncovered;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

Cover cover_from_choice(const std::vector<std::vector<int>>& candidates,
                        const std::vector<int>& choice, const std::vector<int>& carrier) {
  Cover c;
  c.carrier = carrier;
  for (int idx : choice)
    c.elements.push_back({"p" + std::to_string(idx), candidates[idx]});
  c.normalize();
  return c;
}

}  // namespace

DResult refinement_order(const Cover& alpha, const RefinementPool& pool, CountMode mode,
                         long budget) {
  DResult result;
  // usable candidates: restricted to the carrier and contained in some
  // alpha element (the refinement constraint is per-element)
  std::vector<std::vector<int>> usable;
  for (const auto& cand : pool.candidates) {
    std::vector<int> pts = intersect(cand, alpha.carrier);
    if (pts.empty()) continue;
    bool inside = false;
    for (const auto& e : alpha.elements)
      if (subset_of(pts, e.points)) {
        inside = true;
        break;
      }
    if (inside) usable.push_back(std::move(pts));
  }
  std::sort(usable.begin(), usable.end());
  usable.erase(std::unique(usable.begin(), usable.end()), usable.end());

  std::set<int> coverable;
  for (const auto& c : usable) coverable.insert(c.begin(), c.end());
  for (int p : alpha.carrier)
    if (!coverable.count(p)) {
      result.feasible = false;
      result.flag = "pool cannot cover carrier with refining candidates";
      return result;
    }
  result.feasible = true;

  const std::vector<int> greedy_choice = greedy_refinement(usable, alpha.carrier);
  Cover greedy_cover = cover_from_choice(usable, greedy_choice, alpha.carrier);
  const int greedy_order = order(greedy_cover);

  if (mode == CountMode::Greedy) {
    result.value = greedy_order;
    result.witness = std::move(greedy_cover);
    result.exact = greedy_order == 0;  // 0 is the global minimum
    result.flag = result.exact ? "" : "greedy-upper-bound";
    return result;
  }

  std::vector<int> last_cover(alpha.carrier.size(), -1);
  for (int s = 0; s < static_cast<int>(usable.size()); ++s)
    for (size_t c = 0; c < alpha.carrier.size(); ++c)
      if (std::binary_search(usable[s].begin(), usable[s].end(), alpha.carrier[c]))
        last_cover[c] = s;

  DSearch search{usable, alpha.carrier, last_cover, budget};
  search.multiplicity.assign(alpha.carrier.size(), 0);
  search.best = greedy_order;
  search.best_choice = greedy_choice;
  search.run(0, static_cast<int>(alpha.carrier.size()));

  if (search.exhausted) {
    result.value = greedy_order;
    result.witness = std::move(greedy_cover);
    result.exact = greedy_order == 0;
    result.flag = "search-budget-exceeded;greedy-upper-bound";
    return result;
  }
  result.value = search.best;
  result.witness = cover_from_choice(usable, search.best_choice, alpha.carrier);
  result.exact = true;
  return result;
}

MdimReport mdim_estimate(const FunctionSystem& fs, const SigmaGenerator& sigma,
                         const std::vector<Cover>& ladder, const std::vector<int>& n_grid,
                         const std::vector<RefinementPool>& pools, CountMode mode, long budget) {
  if (ladder.empty() || ladder.size() != pools.size())
    throw std::invalid_argument("mdim_estimate: ladder and pools must align");
  if (n_grid.size() < 2) throw std::invalid_argument("mdim_estimate: need >= 2 horizons");
  const double space_diam = fs.space.diameter();
  for (size_t k = 0; k < ladder.size(); ++k) {
    const double want = space_diam / static_cast<double>(k + 1);
    if (ladder[k].max_element_diameter(fs.space) > want + kDistanceTol)
      throw std::invalid_argument("mdim_estimate: ladder diameters must shrink as 1/k");
  }

  MdimReport report;
  report.flags.push_back("pool-restricted upper-bound semantics");
  for (size_t k = 0; k < ladder.size(); ++k) {
    MdimLevel level;
    level.k = static_cast<int>(k + 1);
    for (int n : n_grid) {
      const Cover window = alpha_window(fs, sigma, 0, n - 1, ladder[k]);
      if (window.carrier.empty()) {
        report.flags.push_back("empty carrier at k=" + std::to_string(level.k) +
                               ", n=" + std::to_string(n));
        continue;
      }
      const DResult d = refinement_order(window, pools[k], mode, budget);
      if (!d.feasible) {
        report.flags.push_back("infeasible pool at k=" + std::to_string(level.k) +
                               ", n=" + std::to_string(n));
        continue;
      }
      level.n_grid.push_back(n);
      level.d_values.push_back(d.value);
      level.exact.push_back(d.exact);
    }
    if (level.n_grid.size() >= 2) {
      // least-squares slope of D over the larger half of the horizons
      const size_t m = level.n_grid.size();
      const size_t from = m - std::max<size_t>(2, m / 2);
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      const double cnt = static_cast<double>(m - from);
      for (size_t i = from; i < m; ++i) {
        sx += level.n_grid[i];
        sy += level.d_values[i];
        sxx += static_cast<double>(level.n_grid[i]) * level.n_grid[i];
        sxy += static_cast<double>(level.n_grid[i]) * level.d_values[i];
      }
      const double denom = cnt * sxx - sx * sx;
      level.slope = denom == 0.0 ? 0.0 : (cnt * sxy - sx * sy) / denom;
    }
    report.levels.push_back(std::move(level));
  }
  report.estimate = 0.0;
  for (const auto& l : report.levels) report.estimate = std::max(report.estimate, l.slope);
  return report;
}

}  // namespace meandim
