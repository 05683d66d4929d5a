#pragma once

#include <set>

namespace xcount {

// The two clause sets from the most recent bisection, plus whose turn it is
// when a chain edge is branched. Both sets are empty when no bisection
// session is active. Membership is by stable clause id.
struct PartitionState {
  enum class End { left_end, right_end };

  std::set<int> left, right;
  End next = End::left_end;

  bool active() const { return !left.empty() || !right.empty(); }

  friend bool operator==(const PartitionState& a, const PartitionState& b) {
    return a.left == b.left && a.right == b.right && a.next == b.next;
  }
};

}  // namespace xcount
