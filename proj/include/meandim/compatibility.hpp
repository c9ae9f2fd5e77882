#pragma once

#include <string>
#include <vector>

#include "meandim/cover.hpp"

namespace meandim {

struct CompatibilityVerdict {
  bool compatible = false;
  std::vector<int> violating_fiber;  // points of the first fiber in no single element
  std::string violating_label;
};

// Sufficient condition for alpha-compatibility: every fiber of the labeled
// map sits inside a single element of alpha. labels align with alpha.carrier.
CompatibilityVerdict fibers_compatible(const std::vector<int>& labels, const Cover& alpha);

// A two-element cover {U, V} of the ambient space.
struct PairCover {
  std::vector<int> U;
  std::vector<int> V;
};

struct FSigmaResult {
  bool cover_defect = false;
  std::vector<std::string> defects;
  std::vector<int> carrier;                       // Sigma_sigma (certified)
  std::vector<std::vector<double>> w;             // [pair][space point]
  std::vector<std::vector<double>> values;        // [carrier idx][r*N] F vector
  std::vector<int> labels;                        // fiber ids aligned with carrier
  Cover window_cover;                             // alpha_0^{N-1}(sigma)
  CompatibilityVerdict verdict;
  bool endpoints_ok = true;                       // U = {w<1}, V = {w>0} checks
  std::string convention_note;
};

// w_i(x) = d(x, X-V_i) / (d(x, X-V_i) + d(x, X-U_i)) on the ambient points;
// F places the w-values along the orbit, one block of r values per step
// 0..N-1, and is checked for alpha_0^{N-1}(sigma)-compatibility.
FSigmaResult f_sigma_map(const FunctionSystem& fs, const SigmaGenerator& sigma, int N,
                         const std::vector<PairCover>& pairs);

}  // namespace meandim
