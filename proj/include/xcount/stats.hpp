#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace xcount {

// Counters describing one solve. All fields are deterministic for fixed
// input and seed; merging is associative so per-component stats may be
// combined in any order.
struct SolveStats {
  std::uint64_t leaves = 0;
  std::uint64_t branch_nodes = 0;
  std::uint64_t component_splits = 0;
  std::map<int, std::uint64_t> rule_firings;  // algorithm line -> count

  std::uint64_t contractions = 0;
  std::uint64_t self_loops_resolved = 0;
  std::uint64_t bisections = 0;
  std::vector<int> m3_history;   // degree-3 clause count at each bisection
  std::vector<int> cut_history;  // cut size at each bisection

  std::uint64_t line15_branches = 0;
  std::uint64_t line15_threshold_violations = 0;
  int line15_min_removed = -1;  // smallest per-side removal seen; -1 if none

  void note_line15(int removed_true, int removed_false, bool ok) {
    ++line15_branches;
    if (!ok) ++line15_threshold_violations;
    const int lo = std::min(removed_true, removed_false);
    line15_min_removed = line15_min_removed < 0 ? lo : std::min(line15_min_removed, lo);
  }

  void merge(const SolveStats& o) {
    leaves += o.leaves;
    branch_nodes += o.branch_nodes;
    component_splits += o.component_splits;
    for (const auto& [line, n] : o.rule_firings) rule_firings[line] += n;
    contractions += o.contractions;
    self_loops_resolved += o.self_loops_resolved;
    bisections += o.bisections;
    m3_history.insert(m3_history.end(), o.m3_history.begin(), o.m3_history.end());
    cut_history.insert(cut_history.end(), o.cut_history.begin(), o.cut_history.end());
    line15_branches += o.line15_branches;
    line15_threshold_violations += o.line15_threshold_violations;
    if (o.line15_min_removed >= 0)
      line15_min_removed = line15_min_removed < 0
                               ? o.line15_min_removed
                               : std::min(line15_min_removed, o.line15_min_removed);
  }

  friend bool operator==(const SolveStats& a, const SolveStats& b) {
    return a.leaves == b.leaves && a.branch_nodes == b.branch_nodes &&
           a.component_splits == b.component_splits && a.rule_firings == b.rule_firings &&
           a.contractions == b.contractions && a.self_loops_resolved == b.self_loops_resolved &&
           a.bisections == b.bisections && a.m3_history == b.m3_history &&
           a.cut_history == b.cut_history && a.line15_branches == b.line15_branches &&
           a.line15_threshold_violations == b.line15_threshold_violations &&
           a.line15_min_removed == b.line15_min_removed;
  }
};

}  // namespace xcount
