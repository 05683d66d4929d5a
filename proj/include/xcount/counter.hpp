#pragma once

#include <cassert>
#include <cstdint>
#include <utility>

#include "xcount/bisection.hpp"
#include "xcount/branch.hpp"
#include "xcount/cardinality.hpp"
#include "xcount/clause_graph.hpp"
#include "xcount/errors.hpp"
#include "xcount/formula.hpp"
#include "xcount/max_weight.hpp"
#include "xcount/partition.hpp"
#include "xcount/simplify.hpp"
#include "xcount/stats.hpp"
#include "xcount/weight_poly.hpp"
#include "xcount/weights.hpp"

namespace xcount {

enum class BisectionMode { local_search, random_partition };

struct SolverOptions {
  SimplifyConfig simplify;
  int bisection_restarts = 16;
  std::uint64_t seed = 1;
  BisectionMode bisection_mode = BisectionMode::local_search;
};

template <class Value>
struct CountResult {
  Value value{0};
  SolveStats stats;
};

// The branch-and-reduce recursion. Returns the invariant sum over exactly
// satisfying assignments of the product of the true literals' cardinality
// values. Recursion order per node: simplification fixpoint, component
// split (only when no cut edges remain), threshold lookahead branch, heavy
// variable branch, bisection-edge branch, cycle branch.
template <class Value>
class Solver {
 public:
  explicit Solver(SolverOptions opts = {}) : opts_(opts) {}

  CountResult<Value> count(const Formula& f, const CardinalityVector<Value>& card) {
    if (card.domain() != f.variables())
      throw ContractError("count: cardinality domain differs from the formula's variables");
    stats_ = SolveStats{};
    bisection_events_ = 0;
    Value v = solve(f, card, PartitionState{});
    return {std::move(v), stats_};
  }

  const SolveStats& stats() const { return stats_; }

 private:
  Value solve(Formula f, CardinalityVector<Value> card, PartitionState state) {
    Value mult(1);
    for (;;) {
      Simplifier<Value> simp(f, card, &stats_, opts_.simplify);
      const auto oc = simp.run();
      mult *= oc.multiplier;
      if (oc.status == SimplifyStatus::unsat) {
        ++stats_.leaves;
        return Value(0);
      }
      if (oc.status == SimplifyStatus::fully_solved) {
        ++stats_.leaves;
        return mult;
      }

      // Line 7: independent components, once no bisection edges cross L/R.
      const auto comps = f.component_clause_ids();
      if (comps.size() >= 2 && !has_crossing_edges(f, state)) {
        ++stats_.rule_firings[7];
        ++stats_.component_splits;
        Value product = std::move(mult);
        for (const auto& ids : comps) {
          Formula sub = f.restricted_to(ids);
          CardinalityVector<Value> subcard = card.restricted_to(sub.variables());
          product = product * solve(std::move(sub), std::move(subcard), PartitionState{});
        }
        return product;
      }

      if (has_heavy_variable(f)) {
        // Line 15: branch a variable whose two-sided lookahead meets the
        // removal thresholds.
        const auto la = lookahead_branch_candidate(f, card, opts_.simplify);
        if (la) {
          ++stats_.rule_firings[15];
          return mult * branch(f, card, state, la->var, &*la);
        }
        // Line 16: lowest-id variable occurring at least three times.
        const Var x = select_heavy_variable(f);
        ++stats_.rule_firings[16];
        return mult * branch(f, card, state, x, nullptr);
      }

      if (has_degree3_clause(f)) {
        // Line 17: bisection session over the degree-3 clause graph.
        const ClauseGraph g = build_clause_graph(f);
        if (!g.self_loops.empty()) {
          const auto out = resolve_self_loop(f, card, g.self_loops.front());
          ++stats_.self_loops_resolved;
          mult *= out.multiplier;
          continue;
        }
        const auto choice =
            state.active() ? select_cut_edge_variable(state, g) : std::nullopt;
        if (!choice) {
          const Bisection b = opts_.bisection_mode == BisectionMode::local_search
                                  ? compute_bisection(g, next_seed(), opts_.bisection_restarts)
                                  : random_balanced_bisection(g, next_seed());
          state.left = b.v0;
          state.right = b.v1;
          state.next = PartitionState::End::left_end;
          ++stats_.bisections;
          stats_.m3_history.push_back(static_cast<int>(g.vertices.size()));
          stats_.cut_history.push_back(b.cut_size());
          continue;
        }
        PartitionState branched = state;
        branched.next = choice->next;
        ++stats_.rule_firings[17];
        return mult * branch(f, card, branched, choice->var, nullptr);
      }

      // Line 18: a single cycle of degree-2 clauses.
      const Var x = select_cycle_variable(f);
      ++stats_.rule_firings[18];
      return mult * branch(f, card, state, x, nullptr);
    }
  }

  Value branch(const Formula& f, const CardinalityVector<Value>& card,
               const PartitionState& state, Var x, const LookaheadChoice* projected) {
    ++stats_.branch_nodes;
    const Value weight_true = card.get(Lit(x, true));
    const Value weight_false = card.get(Lit(x, false));
    auto s1 = simulate_branch_side(f, card, x, true, opts_.simplify, &stats_);
    auto s0 = simulate_branch_side(f, card, x, false, opts_.simplify, &stats_);
    if (projected) {
      const bool ok = s1.vars_eliminated == projected->removed_true &&
                      s0.vars_eliminated == projected->removed_false &&
                      meets_line15_thresholds(s1.vars_eliminated, s0.vars_eliminated);
      stats_.note_line15(s1.vars_eliminated, s0.vars_eliminated, ok);
      assert(ok && "line 15: realized eliminations must match the lookahead");
    }
    Value r1 = finish_child(std::move(s1), state);
    Value r0 = finish_child(std::move(s0), state);
    return weight_true * r1 + weight_false * r0;
  }

  Value finish_child(BranchSimulation<Value> side, const PartitionState& state) {
    if (side.status == SimplifyStatus::unsat) {
      ++stats_.leaves;
      return Value(0);
    }
    if (side.status == SimplifyStatus::fully_solved) {
      ++stats_.leaves;
      return side.multiplier;
    }
    return side.multiplier * solve(std::move(side.formula), std::move(side.card), state);
  }

  bool has_crossing_edges(const Formula& f, const PartitionState& state) const {
    if (!state.active()) return false;
    const ClauseGraph g = build_clause_graph(f);
    for (const auto& e : g.edges) {
      const bool cross = (state.left.count(e.a) && state.right.count(e.b)) ||
                         (state.right.count(e.a) && state.left.count(e.b));
      if (cross) return true;
    }
    return false;
  }

  static bool has_heavy_variable(const Formula& f) {
    for (Var v : f.variables())
      if (f.occurrences(v) >= 3) return true;
    return false;
  }

  static bool has_degree3_clause(const Formula& f) {
    for (const auto& [id, c] : f.clauses())
      if (f.clause_degree(id) >= 3) return true;
    return false;
  }

  std::uint64_t next_seed() {
    return opts_.seed ^ (0x9e3779b97f4a7c15ull * ++bisection_events_);
  }

  SolverOptions opts_;
  SolveStats stats_;
  std::uint64_t bisection_events_ = 0;
};

// Plain model counting: with an all-ones vector the result is |S_phi|.
inline CountResult<Natural> count_models(const Formula& f,
                                         const CardinalityVector<Natural>& card,
                                         const SolverOptions& opts = {}) {
  return Solver<Natural>(opts).count(f, card);
}

inline CountResult<Natural> count_models(const Formula& f, const SolverOptions& opts = {}) {
  return count_models(f, CardinalityVector<Natural>::all_ones(f.variables()), opts);
}

// Per-weight counting: coefficient a_k of the result counts the solutions of
// total true-literal weight k. Weights must lie in [0, q_bound].
inline CountResult<WeightPolynomial> count_by_weight(const Formula& f,
                                                     const WeightAssignment& w,
                                                     long long q_bound,
                                                     const SolverOptions& opts = {}) {
  CardinalityVector<WeightPolynomial> card;
  for (Var v : f.variables()) {
    for (bool positive : {true, false}) {
      const long long k = w.get(Lit(v, positive));
      if (k < 0 || k > q_bound)
        throw InputError("weight " + std::to_string(k) + " of literal " +
                         Lit(v, positive).str() + " is outside [0, " +
                         std::to_string(q_bound) + "]");
    }
    card.insert_var(v, WeightPolynomial::monomial(Natural(1), w.get(Lit(v, true))),
                    WeightPolynomial::monomial(Natural(1), w.get(Lit(v, false))));
  }
  return Solver<WeightPolynomial>(opts).count(f, card);
}

// Maximum-weight counting: (count at the maximum total weight, that weight);
// (0,0) when unsatisfiable.
inline CountResult<MaxWeightPair> count_max_weight(const Formula& f, const WeightAssignment& w,
                                                   const SolverOptions& opts = {}) {
  CardinalityVector<MaxWeightPair> card;
  for (Var v : f.variables()) {
    for (bool positive : {true, false})
      if (w.get(Lit(v, positive)) < 0)
        throw InputError("negative weight for literal " + Lit(v, positive).str());
    card.insert_var(v, MaxWeightPair(Natural(1), w.get(Lit(v, true))),
                    MaxWeightPair(Natural(1), w.get(Lit(v, false))));
  }
  return Solver<MaxWeightPair>(opts).count(f, card);
}

}  // namespace xcount
