#pragma once

#include <vector>

#include "twistab/curve_graph.hpp"
#include "twistab/rational.hpp"

namespace twistab {

// A maximal region of (0,1]^n on which the truth values of all inequalities
// sum_{i in I} a_i <= 1 (|I| >= 2) are constant. `family` holds the subsets
// (as sorted 1-based index lists) whose sum stays <= 1 on the region.
struct Chamber {
  int n = 0;
  std::vector<std::vector<int>> family;  // sorted lexicographically
  QVec witness;                          // strict interior point

  bool holds_at(const QVec& point) const;
};

// All realizable chambers, via exact rational LP feasibility over the
// downward-closed candidate families. Throws TooLarge for n > 5.
std::vector<Chamber> chambers(int n);

// For each I of size >= 2: sum_I a <= 1 iff sum_I b <= 1. Throws
// LengthMismatch.
bool same_chamber(const WeightVector& a, const WeightVector& b);

}  // namespace twistab
