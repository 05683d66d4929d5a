#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "xcount/clause_graph.hpp"

namespace xcount {

// A balanced vertex split: the side sizes differ by at most one and `cut`
// holds the indices of the crossing edges.
struct Bisection {
  std::set<int> v0, v1;
  std::vector<std::size_t> cut;

  int cut_size() const { return static_cast<int>(cut.size()); }
};

// Balanced local-search bisection (swap/move hill climbing with seeded random
// restarts). The balance invariant always holds; cut quality is best effort
// toward |V|/6. Requires at least two vertices.
Bisection compute_bisection(const ClauseGraph& g, std::uint64_t seed, int restarts = 16);

// A random balanced split with no search; counting correctness may not depend
// on the difference.
Bisection random_balanced_bisection(const ClauseGraph& g, std::uint64_t seed);

}  // namespace xcount
