#include "meandim/function_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace meandim {

std::vector<int> PartialMap::domain() const {
  std::vector<int> d;
  for (int x = 0; x < static_cast<int>(image.size()); ++x)
    if (image[x] >= 0) d.push_back(x);
  return d;
}

std::vector<int> PartialMap::range() const {
  std::vector<int> r;
  for (int v : image)
    if (v >= 0) r.push_back(v);
  std::sort(r.begin(), r.end());
  return r;
}

int FunctionSystem::map_index(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(maps.size()); ++i)
    if (maps[i].id == id) return i;
  return -1;
}

void FunctionSystem::validate() const {
  const int n = space.size();
  std::set<std::string> ids;
  for (const auto& v : maps) {
    if (!ids.insert(v.id).second)
      throw std::invalid_argument("duplicate map id: " + v.id);
    if (static_cast<int>(v.image.size()) != n)
      throw std::invalid_argument("map " + v.id + ": image table size mismatch");
    std::set<int> targets;
    int domain_size = 0;
    for (int x = 0; x < n; ++x) {
      const int y = v.image[x];
      if (y < 0) continue;
      ++domain_size;
      if (y >= n) throw std::invalid_argument("map " + v.id + ": target out of range");
      if (!targets.insert(y).second)
        throw std::invalid_argument("map " + v.id + ": not injective");
    }
    if (domain_size == 0) throw std::invalid_argument("map " + v.id + ": empty domain");
  }
}

AdmissibilityGraph build_graph(const FunctionSystem& fs) {
  AdmissibilityGraph g;
  g.node_count = fs.space.size();
  g.out.assign(g.node_count, {});
  for (int m = 0; m < static_cast<int>(fs.maps.size()); ++m)
    for (int x = 0; x < g.node_count; ++x)
      if (fs.maps[m].in_domain(x)) g.out[x].push_back({m, fs.maps[m].apply(x)});
  for (auto& edges : g.out) std::sort(edges.begin(), edges.end());

  // Greatest fixed point of "has an outgoing edge into the core": start with
  // everything, repeatedly drop nodes with no surviving successor.
  g.infinite_core.assign(g.node_count, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < g.node_count; ++x) {
      if (!g.infinite_core[x]) continue;
      bool alive = false;
      for (const auto& [m, y] : g.out[x])
        if (g.infinite_core[y]) {
          alive = true;
          break;
        }
      if (!alive) {
        g.infinite_core[x] = 0;
        changed = true;
      }
    }
  }
  return g;
}

bool AdmissibilityGraph::core_empty() const {
  return std::find(infinite_core.begin(), infinite_core.end(), char(1)) == infinite_core.end();
}

std::optional<std::vector<int>> ifs_witness(const FunctionSystem& fs) {
  const int n = fs.space.size();
  std::vector<char> in_union_domain(n, 0);
  for (const auto& v : fs.maps)
    for (int x = 0; x < n; ++x)
      if (v.in_domain(x)) in_union_domain[x] = 1;

  // Iterated deletion computes the greatest O closed under
  // v(D(v) cap O) subset (U D(v)) cap O; closed sets are union-stable so the
  // fixed point is the unique maximal witness candidate.
  std::vector<char> in_O(n, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& v : fs.maps)
      for (int x = 0; x < n; ++x) {
        if (!in_O[x] || !v.in_domain(x)) continue;
        const int y = v.apply(x);
        if (!in_union_domain[y] || !in_O[y]) {
          in_O[x] = 0;
          changed = true;
        }
      }
  }

  bool image_nonempty = false;
  for (const auto& v : fs.maps)
    for (int x = 0; x < n && !image_nonempty; ++x)
      if (in_O[x] && v.in_domain(x)) image_nonempty = true;
  if (!image_nonempty) return std::nullopt;

  std::vector<int> witness;
  for (int x = 0; x < n; ++x)
    if (in_O[x]) witness.push_back(x);
  return witness;
}

IfsCheck check_ifs(const FunctionSystem& fs) {
  IfsCheck result;
  if (auto w = ifs_witness(fs)) {
    result.is_ifs = true;
    result.witness = std::move(*w);
  }
  return result;
}

}  // namespace meandim
