#pragma once

#include <optional>
#include <string>
#include <vector>

#include "meandim/metric_space.hpp"

namespace meandim {

// Domain-restricted injection on the ambient model's points. Entry -1 means
// the point is outside the domain. In a finite model every subset is closed,
// so domains are plain subsets and "homeomorphism" reduces to injectivity.
struct PartialMap {
  std::string id;
  std::vector<int> image;  // size = space size; image[x] = v(x) or -1

  bool in_domain(int x) const { return image[x] >= 0; }
  int apply(int x) const { return image[x]; }

  std::vector<int> domain() const;
  std::vector<int> range() const;
};

struct FunctionSystem {
  MetricSpaceModel space;
  std::vector<PartialMap> maps;

  int map_index(const std::string& id) const;  // -1 if unknown

  // Throws std::invalid_argument on malformed data: wrong image sizes,
  // duplicate ids, empty domains, non-injective maps, out-of-range targets.
  void validate() const;
};

// Labeled edge relation x -(v)-> v(x) plus the set of nodes supporting an
// infinite admissible continuation (nodes that reach a cycle).
struct AdmissibilityGraph {
  int node_count = 0;
  std::vector<std::vector<std::pair<int, int>>> out;  // per node: (map index, target)
  std::vector<char> infinite_core;

  bool in_core(int x) const { return infinite_core[x] != 0; }
  bool core_empty() const;
};

AdmissibilityGraph build_graph(const FunctionSystem& fs);

// Maximal O with {} != U v(D(v) cap O) subset (U D(v)) cap O, computed by
// iterated deletion; nullopt when no nonempty witness survives.
std::optional<std::vector<int>> ifs_witness(const FunctionSystem& fs);

struct IfsCheck {
  bool is_ifs = false;
  std::vector<int> witness;
};

IfsCheck check_ifs(const FunctionSystem& fs);

}  // namespace meandim
