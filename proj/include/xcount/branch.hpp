#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "xcount/clause_graph.hpp"
#include "xcount/errors.hpp"
#include "xcount/partition.hpp"
#include "xcount/simplify.hpp"

namespace xcount {

// One side of a candidate branch: the reduced state after assigning the
// variable and running the simplification fixpoint.
template <class Value>
struct BranchSimulation {
  SimplifyStatus status = SimplifyStatus::reduced;
  Value multiplier{1};
  Formula formula;
  CardinalityVector<Value> card;
  int vars_eliminated = 0;
};

template <class Value>
BranchSimulation<Value> simulate_branch_side(const Formula& f,
                                             const CardinalityVector<Value>& card, Var x,
                                             bool value, const SimplifyConfig& cfg = {},
                                             SolveStats* stats = nullptr) {
  BranchSimulation<Value> out;
  out.formula = f;
  out.card = card;
  const int before = static_cast<int>(out.card.domain_size());
  out.card.erase_var(x);
  out.formula.substitute_constant(x, value);
  Simplifier<Value> simp(out.formula, out.card, stats, cfg);
  const auto oc = simp.run();
  out.status = oc.status;
  out.multiplier = oc.multiplier;
  out.vars_eliminated = oc.status == SimplifyStatus::reduced
                            ? before - static_cast<int>(out.card.domain_size())
                            : before;
  return out;
}

// Removal thresholds quoted in Line 15: at least 7 on both branches, or 8/6,
// or 9/5.
inline bool meets_line15_thresholds(int t1, int t0) {
  const int lo = std::min(t1, t0);
  const int hi = std::max(t1, t0);
  return lo >= 7 || (hi >= 8 && lo >= 6) || (hi >= 9 && lo >= 5);
}

struct LookaheadChoice {
  Var var = 0;
  int removed_true = 0;
  int removed_false = 0;
};

// Simulates both settings of every variable within distance 2 of a
// >=3-occurrence variable; returns the lowest-id variable whose eliminated
// counts meet the Line-15 thresholds.
template <class Value>
std::optional<LookaheadChoice> lookahead_branch_candidate(const Formula& f,
                                                          const CardinalityVector<Value>& card,
                                                          const SimplifyConfig& cfg = {}) {
  std::set<Var> candidates;
  for (Var h : f.variables()) {
    if (f.occurrences(h) < 3) continue;
    std::set<Var> near{h};
    for (int cid : f.clauses_of(h))
      for (Var v : f.clause(cid).vars()) near.insert(v);
    for (Var v : near) {
      candidates.insert(v);
      for (int cid : f.clauses_of(v))
        for (Var u : f.clause(cid).vars()) candidates.insert(u);
    }
  }
  for (Var v : candidates) {
    const auto s1 = simulate_branch_side(f, card, v, true, cfg);
    const auto s0 = simulate_branch_side(f, card, v, false, cfg);
    if (meets_line15_thresholds(s1.vars_eliminated, s0.vars_eliminated))
      return LookaheadChoice{v, s1.vars_eliminated, s0.vars_eliminated};
  }
  return std::nullopt;
}

// Line 16: the lowest-id variable occurring at least three times.
Var select_heavy_variable(const Formula& f);

// Line 18: every clause degree 2 and connected; the lowest-id variable.
Var select_cycle_variable(const Formula& f);

struct CutEdgeChoice {
  Var var = 0;
  PartitionState::End next = PartitionState::End::left_end;
};

// Line 17: the crossing edge with the smallest (clause id, clause id) pair.
// A shared-variable edge branches its variable; a chain edge branches the
// chain-end variable on the side the alternation flag points to and toggles
// the flag. Empty result signals that a fresh bisection is needed.
std::optional<CutEdgeChoice> select_cut_edge_variable(const PartitionState& state,
                                                      const ClauseGraph& g);

// Fixes one end variable of a chain of degree-2 clauses and cascades the
// simplification rules; afterwards the chain's interior variables are gone
// and the terminal degree-3 clauses have dropped to degree <= 2.
template <class Value>
SimplifyOutcome<Value> compress_chain(Formula& f, CardinalityVector<Value>& card,
                                      const std::vector<int>& chain, Var fixed_end, bool value,
                                      const SimplifyConfig& cfg = {}) {
  if (chain.empty()) throw ContractError("compress_chain: empty chain");
  for (int id : chain) {
    if (!f.contains(id)) throw ContractError("compress_chain: unknown chain clause");
    if (f.clause_degree(id) != 2)
      throw ContractError("compress_chain: clause " + std::to_string(id) +
                          " has degree " + std::to_string(f.clause_degree(id)));
  }
  bool end_in_chain = false;
  for (Var v : f.clause(chain.front()).vars()) end_in_chain |= v == fixed_end;
  for (Var v : f.clause(chain.back()).vars()) end_in_chain |= v == fixed_end;
  if (!end_in_chain) throw ContractError("compress_chain: fixed_end is not an end variable");

  // terminal degree-3 neighbours and the variables interior to the chain
  std::set<int> chain_ids(chain.begin(), chain.end());
  std::set<int> terminals;
  std::set<Var> interior;
  for (int id : chain) {
    for (Var v : f.clause(id).vars()) {
      bool outside = false;
      for (int other : f.clauses_of(v))
        if (!chain_ids.count(other)) {
          outside = true;
          if (other != id) terminals.insert(other);
        }
      if (!outside) interior.insert(v);
    }
  }

  Simplifier<Value> simp(f, card, nullptr, cfg);
  simp.assign(Lit(fixed_end, true), value);
  const auto out = simp.run();
  if (out.status == SimplifyStatus::reduced) {
    for (Var v : interior)
      if (f.has_var(v)) throw ContractError("compress_chain: interior variable survived");
    for (int id : terminals)
      if (f.contains(id) && f.clause_degree(id) > 2)
        throw ContractError("compress_chain: terminal clause kept degree 3");
  }
  return out;
}

// A degree-3 clause connected to itself by a chain: evaluates both settings of
// the loop variable y with pinned fresh stand-ins, rolls the dead-ended chain
// into the boundary variable x by repeated 3-variable contractions, and
// combines c(x) = c(y)*c(x:y=1) + c(~y)*c(x:y=0) (likewise for c(~x)). The
// loop's variables and clauses disappear. If x occurs nowhere else, the
// combined weight is returned as the multiplier instead.
template <class Value>
SimplifyOutcome<Value> resolve_self_loop(Formula& f, CardinalityVector<Value>& card,
                                         const ClauseGraph::SelfLoop& loop) {
  if (!f.contains(loop.clause)) throw ContractError("self-loop: unknown clause");
  const std::set<Var> c_vars = f.clause(loop.clause).vars();
  if (!c_vars.count(loop.end_first) || !c_vars.count(loop.end_last) ||
      loop.end_first == loop.end_last)
    throw ContractError("self-loop: chain ends are not two variables of the clause");
  if (loop.chain.empty()) throw ContractError("self-loop: empty chain");

  const Var y = loop.end_first;
  const Var z = loop.end_last;
  Var x = 0;
  for (Var v : c_vars)
    if (v != y && v != z) x = v;
  if (x == 0) throw ContractError("self-loop: clause has no third variable");

  std::set<Var> loop_vars{y, z};
  for (int id : loop.chain)
    for (Var v : f.clause(id).vars()) loop_vars.insert(v);
  if (loop_vars.count(x)) throw ContractError("self-loop: boundary variable inside the chain");
  std::set<int> loop_clauses(loop.chain.begin(), loop.chain.end());
  loop_clauses.insert(loop.clause);
  for (Var v : loop_vars)
    for (int id : f.clauses_of(v))
      if (!loop_clauses.count(id))
        throw ContractError("self-loop: variable " + std::to_string(v) +
                            " escapes the loop");

  const Var fresh_v = f.max_var() + 1;  // stands for y inside the clause
  const Var fresh_w = f.max_var() + 2;  // stands for y inside the chain head

  // connector between consecutive chain clauses, precomputed from the live formula
  std::vector<Var> connector(loop.chain.size());
  for (std::size_t k = 0; k + 1 < loop.chain.size(); ++k) {
    Var shared = 0;
    for (Var v : f.clause(loop.chain[k]).vars())
      if (f.clause(loop.chain[k + 1]).vars().count(v)) shared = v;
    if (shared == 0) throw ContractError("self-loop: chain clauses do not connect");
    connector[k] = shared;
  }
  connector.back() = z;

  auto roll = [&](bool y_value) {
    Formula scratch;
    auto rewrite = [&](int id, Var from, Var to) {
      std::vector<Entry> es = f.clause(id).entries();
      for (Entry& e : es)
        if (e.is_literal() && e.lit().var() == from)
          e = Entry::literal(Lit(to, e.lit().positive()));
      return es;
    };
    scratch.add_clause_with_id(loop.clause, rewrite(loop.clause, y, fresh_v));
    scratch.add_clause_with_id(loop.chain.front(), rewrite(loop.chain.front(), y, fresh_w));
    for (std::size_t k = 1; k < loop.chain.size(); ++k)
      scratch.add_clause_with_id(loop.chain[k], f.clause(loop.chain[k]).entries());

    CardinalityVector<Value> sc;
    for (Var v : loop_vars)
      if (v != y) sc.insert_var(v, card.get(Lit(v, true)), card.get(Lit(v, false)));
    const Value on(1), off(0);
    sc.insert_var(fresh_v, y_value ? on : off, y_value ? off : on);
    sc.insert_var(fresh_w, y_value ? on : off, y_value ? off : on);
    sc.insert_var(x, Value(1), Value(1));

    for (std::size_t k = 0; k < loop.chain.size(); ++k) {
      std::set<Var> I = scratch.clause(loop.chain[k]).vars();
      contract_semi_isolated(scratch, sc, I, connector[k]);
    }
    // only the rewritten clause remains; sum out its non-x variables
    return contraction_sums(scratch, sc, {loop.clause}, x);
  };

  const auto [a1, b1] = roll(true);
  const auto [a0, b0] = roll(false);

  const Value cy = card.get(Lit(y, true));
  const Value cyn = card.get(Lit(y, false));
  Value new_pos = card.get(Lit(x, true)) * (cy * a1 + cyn * a0);
  Value new_neg = card.get(Lit(x, false)) * (cy * b1 + cyn * b0);

  for (Var v : loop_vars) card.erase_var(v);
  for (int id : loop_clauses) f.remove_clause(id);

  SimplifyOutcome<Value> out{SimplifyStatus::reduced, Value(1)};
  if (f.has_var(x)) {
    card.set(Lit(x, true), std::move(new_pos));
    card.set(Lit(x, false), std::move(new_neg));
  } else {
    out.multiplier = new_pos + new_neg;
    card.erase_var(x);
  }
  return out;
}

}  // namespace xcount
