#include "xcount/branch.hpp"

namespace xcount {

Var select_heavy_variable(const Formula& f) {
  for (Var v : f.variables())
    if (f.occurrences(v) >= 3) return v;
  throw ContractError("select_heavy_variable: no variable occurs three times");
}

Var select_cycle_variable(const Formula& f) {
  if (f.empty()) throw ContractError("select_cycle_variable: empty formula");
  for (const auto& [id, c] : f.clauses())
    if (f.clause_degree(id) != 2)
      throw ContractError("select_cycle_variable: clause " + std::to_string(id) +
                          " has degree " + std::to_string(f.clause_degree(id)));
  return *f.variables().begin();
}

std::optional<CutEdgeChoice> select_cut_edge_variable(const PartitionState& state,
                                                      const ClauseGraph& g) {
  for (const auto& e : g.edges) {
    const bool a_left = state.left.count(e.a) > 0;
    const bool a_right = state.right.count(e.a) > 0;
    const bool b_left = state.left.count(e.b) > 0;
    const bool b_right = state.right.count(e.b) > 0;
    const bool crossing = (a_left && b_right) || (a_right && b_left);
    if (!crossing) continue;
    if (e.kind == ClauseGraph::Edge::Kind::shared_var)
      return CutEdgeChoice{e.var_a, state.next};
    const Var left_var = a_left ? e.var_a : e.var_b;
    const Var right_var = a_left ? e.var_b : e.var_a;
    CutEdgeChoice choice;
    if (state.next == PartitionState::End::left_end) {
      choice.var = left_var;
      choice.next = PartitionState::End::right_end;
    } else {
      choice.var = right_var;
      choice.next = PartitionState::End::left_end;
    }
    return choice;
  }
  return std::nullopt;
}

}  // namespace xcount
