#pragma once

#include <stdexcept>
#include <vector>

namespace meandim {

// Eventually periodic symbol sequence sigma = pre . period^inf over map
// indices. symbol(n) is the map applied at step n (1-based).
struct SigmaGenerator {
  std::vector<int> pre;
  std::vector<int> period;

  int symbol(long n) const {
    if (n < 1) throw std::invalid_argument("sigma symbol index must be >= 1");
    if (n <= static_cast<long>(pre.size())) return pre[n - 1];
    if (period.empty()) throw std::invalid_argument("sigma generator has empty period");
    const long k = (n - 1 - static_cast<long>(pre.size())) % static_cast<long>(period.size());
    return period[k];
  }

  static SigmaGenerator constant(int map_index) { return SigmaGenerator{{}, {map_index}}; }

  // Shifted generator sigma(+inf, n): drop the first n symbols.
  SigmaGenerator shifted(long n) const {
    SigmaGenerator s;
    s.period = period;
    for (long i = n + 1; i <= static_cast<long>(pre.size()); ++i) s.pre.push_back(pre[i - 1]);
    if (n > static_cast<long>(pre.size()) && !period.empty()) {
      const long rot = (n - static_cast<long>(pre.size())) % static_cast<long>(period.size());
      std::vector<int> p;
      for (size_t i = 0; i < period.size(); ++i) p.push_back(period[(rot + i) % period.size()]);
      s.period = p;
    }
    return s;
  }

  // Horizon after which membership in Sigma_sigma is stable on a model with
  // the given point count: survival through pre + |X| full periods implies
  // survival forever.
  long stable_horizon(int space_size) const {
    return static_cast<long>(pre.size()) +
           static_cast<long>(space_size) * static_cast<long>(period.size());
  }
};

}  // namespace meandim
