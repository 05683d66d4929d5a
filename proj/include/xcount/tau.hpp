#pragma once

#include <vector>

namespace xcount {

// Variables removed per branch of a branching rule; at least two branches,
// every entry at least 1.
struct BranchingVector {
  std::vector<int> removals;
};

// The unique root beta >= 1 of sum_i x^{-t_i} = 1, found by bisection to an
// absolute tolerance of 1e-9. Bounds the search-tree leaves by beta^n.
double branching_factor(const BranchingVector& v);

}  // namespace xcount
