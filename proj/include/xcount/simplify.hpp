#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "xcount/cardinality.hpp"
#include "xcount/errors.hpp"
#include "xcount/formula.hpp"
#include "xcount/stats.hpp"

namespace xcount {

enum class SimplifyStatus { reduced, unsat, fully_solved };

template <class Value>
struct SimplifyOutcome {
  SimplifyStatus status = SimplifyStatus::reduced;
  Value multiplier{1};  // product of forced-assignment weights
};

struct SimplifyConfig {
  int contraction_cap = 20;  // largest semi-isolated set contracted
};

using LineMask = std::uint32_t;
constexpr LineMask line_bit(int line) { return LineMask{1} << line; }
constexpr LineMask kConstantLines = line_bit(1) | line_bit(2) | line_bit(3) | line_bit(4);
constexpr LineMask kTwoLiteralLines = line_bit(1) | line_bit(5) | line_bit(6);
constexpr LineMask kIntraClauseLines = line_bit(1) | line_bit(8) | line_bit(9);
constexpr LineMask kSingletonLines = line_bit(1) | line_bit(10);
constexpr LineMask kOverlapLines = line_bit(1) | line_bit(11) | line_bit(12) | line_bit(13);
constexpr LineMask kAllLines =
    kConstantLines | kTwoLiteralLines | kIntraClauseLines | kSingletonLines | kOverlapLines |
    line_bit(14);

// Sums over assignments of the variables of the given clauses other than x:
// first element for x=1, second for x=0. Each admitted assignment must leave
// every clause with exactly one true entry; it contributes the product of the
// cardinality values of its true literals. Enumerates depth-first with
// per-clause pruning.
template <class Value>
std::pair<Value, Value> contraction_sums(const Formula& f, const CardinalityVector<Value>& card,
                                         const std::vector<int>& clause_ids, Var x) {
  struct ClauseState {
    int true_count = 0;
    int unassigned = 0;
  };
  std::set<Var> inner_set;
  for (int id : clause_ids)
    for (Var v : f.clause(id).vars())
      if (v != x) inner_set.insert(v);
  const std::vector<Var> inner(inner_set.begin(), inner_set.end());

  // var -> (clause index, literal positive) per entry
  std::map<Var, std::vector<std::pair<int, bool>>> slots;
  std::vector<ClauseState> base(clause_ids.size());
  std::vector<std::vector<std::pair<int, bool>>> x_slots_by_clause;  // x entries, resolved per run
  std::vector<std::pair<int, bool>> x_entries;
  for (std::size_t ci = 0; ci < clause_ids.size(); ++ci) {
    for (const Entry& e : f.clause(clause_ids[ci]).entries()) {
      if (e.is_constant()) {
        if (e.value()) ++base[ci].true_count;
      } else if (e.lit().var() == x) {
        x_entries.emplace_back(static_cast<int>(ci), e.lit().positive());
      } else {
        slots[e.lit().var()].emplace_back(static_cast<int>(ci), e.lit().positive());
        ++base[ci].unassigned;
      }
    }
  }

  auto run = [&](bool x_value) {
    std::vector<ClauseState> st = base;
    for (auto [ci, positive] : x_entries)
      if (positive == x_value) ++st[ci].true_count;
    // quick reject on clauses already decided
    for (const ClauseState& s : st)
      if (s.true_count > 1 || (s.unassigned == 0 && s.true_count != 1)) return Value(0);

    Value total(0);
    std::vector<Var> order = inner;
    // depth-first over `order`
    std::function<void(std::size_t, Value)> dfs = [&](std::size_t i, Value product) {
      if (i == order.size()) {
        total += product;
        return;
      }
      const Var v = order[i];
      for (bool val : {false, true}) {
        bool ok = true;
        for (auto [ci, positive] : slots[v]) {
          --st[ci].unassigned;
          if (positive == val) ++st[ci].true_count;
        }
        for (auto [ci, positive] : slots[v]) {
          (void)positive;
          if (st[ci].true_count > 1 ||
              (st[ci].unassigned == 0 && st[ci].true_count != 1)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          Value next = product * card.get(Lit(v, val));
          if (!(next == Value(0))) dfs(i + 1, std::move(next));
        }
        for (auto [ci, positive] : slots[v]) {
          ++st[ci].unassigned;
          if (positive == val) --st[ci].true_count;
        }
      }
    };
    dfs(0, Value(1));
    return total;
  };

  return {run(true), run(false)};
}

// Contracts the semi-isolated set I into its boundary variable x: the clauses
// whose variables lie entirely inside I are folded into c(x) and c(~x), and
// the variables of I-{x} disappear from the formula and the vector.
template <class Value>
SimplifyOutcome<Value> contract_semi_isolated(Formula& f, CardinalityVector<Value>& card,
                                              const std::set<Var>& I, Var x, int cap = 20) {
  if (!I.count(x)) throw ContractError("contract: boundary variable not in I");
  if (static_cast<int>(I.size()) > cap)
    throw ContractError("contract: set exceeds cap " + std::to_string(cap));
  std::vector<int> s_ids;
  for (const auto& [id, c] : f.clauses()) {
    const std::set<Var> vs = c.vars();
    bool internal = true;
    for (Var v : vs)
      if (!I.count(v)) internal = false;
    if (internal) s_ids.push_back(id);
  }
  for (Var v : I) {
    if (v == x) continue;
    if (!f.has_var(v)) throw ContractError("contract: variable not in formula");
    for (int id : f.clauses_of(v)) {
      bool in_s = false;
      for (int s : s_ids)
        if (s == id) in_s = true;
      if (!in_s) throw ContractError("contract: set is not semi-isolated");
    }
  }

  auto [sum1, sum0] = contraction_sums(f, card, s_ids, x);
  card.set(Lit(x, true), card.get(Lit(x, true)) * sum1);
  card.set(Lit(x, false), card.get(Lit(x, false)) * sum0);
  for (Var v : I)
    if (v != x) card.erase_var(v);
  for (int id : s_ids) f.remove_clause(id);
  return {SimplifyStatus::reduced, Value(1)};
}

// Applies Lines 1-6 and 8-14 with descending priority. Line 7 (component
// splitting) is orchestrated by the counter. The instance mutates the formula
// and cardinality vector it was constructed on.
template <class Value>
class Simplifier {
 public:
  Simplifier(Formula& f, CardinalityVector<Value>& card, SolveStats* stats = nullptr,
             SimplifyConfig cfg = {})
      : f_(f), card_(card), stats_(stats), cfg_(cfg) {}

  SimplifyStatus status() const { return status_; }
  const Value& multiplier() const { return mult_; }

  SimplifyOutcome<Value> run(LineMask lines = kAllLines) {
    while (status_ == SimplifyStatus::reduced && step(lines)) {
    }
    return {status_, mult_};
  }

  // One rule firing among the allowed lines; returns the line fired.
  std::optional<int> step(LineMask lines = kAllLines) {
    if (status_ != SimplifyStatus::reduced) return std::nullopt;
    if (line1_terminal()) return 1;
    using TryFn = bool (Simplifier::*)();
    static constexpr std::pair<int, TryFn> kTable[] = {
        {2, &Simplifier::try_line2},   {3, &Simplifier::try_line3},
        {4, &Simplifier::try_line4},   {5, &Simplifier::try_line5},
        {6, &Simplifier::try_line6},   {8, &Simplifier::try_line8},
        {9, &Simplifier::try_line9},   {10, &Simplifier::try_line10},
        {11, &Simplifier::try_line11}, {12, &Simplifier::try_line12},
        {13, &Simplifier::try_line13}, {14, &Simplifier::try_line14},
    };
    for (auto [line, fn] : kTable) {
      if (!(lines & line_bit(line))) continue;
      if ((this->*fn)()) {
        if (stats_) ++stats_->rule_firings[line];
        return line;
      }
    }
    return std::nullopt;
  }

  // Forced assignment: multiplies in the weight of the literal made true,
  // drops the variable's entries, and substitutes constants in the formula.
  void assign(Lit l, bool value) {
    mult_ *= card_.get(value ? l : ~l);
    card_.erase_var(l.var());
    f_.substitute_constant(l.var(), l.positive() ? value : !value);
  }

 private:
  bool line1_terminal() {
    for (const auto& [id, c] : f_.clauses())
      if (!c.locally_exact_satisfiable()) {
        status_ = SimplifyStatus::unsat;
        return true;
      }
    if (f_.empty()) {
      status_ = SimplifyStatus::fully_solved;
      return true;
    }
    return false;
  }

  bool try_line2() {
    for (const auto& [id, c] : f_.clauses()) {
      if (!c.has_constant(true)) continue;
      for (;;) {
        const Clause& cl = f_.clause(id);
        const Entry* first_lit = nullptr;
        for (const Entry& e : cl.entries())
          if (e.is_literal()) {
            first_lit = &e;
            break;
          }
        if (!first_lit) break;
        assign(first_lit->lit(), false);
      }
      f_.remove_clause(id);
      return true;
    }
    return false;
  }

  bool try_line3() {
    for (const auto& [id, c] : f_.clauses())
      if (c.has_constant(false)) {
        f_.strip_false_constants(id);
        return true;
      }
    return false;
  }

  bool try_line4() {
    for (const auto& [id, c] : f_.clauses())
      if (c.size() == 1 && c.entries()[0].is_literal()) {
        assign(c.entries()[0].lit(), true);
        f_.remove_clause(id);
        return true;
      }
    return false;
  }

  bool try_line5() {
    for (const auto& [id, c] : f_.clauses()) {
      if (c.size() != 2 || c.has_constant()) continue;
      const Lit p = c.entries()[0].lit();
      const Lit q = c.entries()[1].lit();
      if (p.var() == q.var()) continue;
      link_equivalent(p, q);
      return true;
    }
    return false;
  }

  bool try_line6() {
    for (const auto& [id, c] : f_.clauses()) {
      if (c.size() != 2 || c.has_constant()) continue;
      const Lit p = c.entries()[0].lit();
      const Lit q = c.entries()[1].lit();
      if (p.var() != q.var() || p == q) continue;  // (x v x) is line-1 material
      if (f_.occurrences(p.var()) > 1) {
        f_.remove_clause(id);
        return true;
      }
      mult_ *= card_.get(p) + card_.get(~p);
      card_.erase_var(p.var());
      f_.remove_clause(id);
      return true;
    }
    return false;
  }

  bool try_line8() {
    for (const auto& [id, c] : f_.clauses()) {
      const auto& es = c.entries();
      for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
          if (es[i].is_literal() && es[j].is_literal() && es[i].lit() == es[j].lit()) {
            assign(es[i].lit(), false);
            return true;
          }
    }
    return false;
  }

  bool try_line9() {
    for (const auto& [id, c] : f_.clauses()) {
      const auto& es = c.entries();
      for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
          if (!es[i].is_literal() || !es[j].is_literal()) continue;
          if (es[i].lit() != ~es[j].lit()) continue;
          for (std::size_t k = 0; k < es.size(); ++k)
            if (k != i && k != j && es[k].is_literal()) {
              assign(es[k].lit(), false);
              return true;
            }
        }
    }
    return false;
  }

  bool try_line10() {
    for (const auto& [id, c] : f_.clauses()) {
      std::map<Var, Lit> singles;  // ascending var order
      for (const Entry& e : c.entries())
        if (e.is_literal() && f_.occurrences(e.lit().var()) == 1)
          singles.emplace(e.lit().var(), e.lit());
      if (singles.size() < 2) continue;
      auto it = singles.begin();
      const Lit p = it->second;
      const Lit q = std::next(it)->second;
      Value new_pos = card_.get(p) * card_.get(~q) + card_.get(~p) * card_.get(q);
      Value new_neg = card_.get(~p) * card_.get(~q);
      card_.set(p, std::move(new_pos));
      card_.set(~p, std::move(new_neg));
      card_.erase_var(q.var());
      const auto& es = c.entries();
      for (std::size_t i = 0; i < es.size(); ++i)
        if (es[i].is_literal() && es[i].lit() == q) {
          f_.remove_entry(id, i);
          break;
        }
      return true;
    }
    return false;
  }

  // Shared-pair classification for Lines 11-13: literals of the two clauses
  // on their common variables, split into identical and complementary.
  struct Overlap {
    int c1 = 0, c2 = 0;
    std::vector<Lit> same;     // literal as it appears in both clauses
    std::vector<Lit> flipped;  // literal as it appears in c1 (negated in c2)
  };

  template <class Pred>
  std::optional<Overlap> find_overlap(Pred pred) const {
    for (auto it1 = f_.clauses().begin(); it1 != f_.clauses().end(); ++it1) {
      for (auto it2 = std::next(it1); it2 != f_.clauses().end(); ++it2) {
        std::map<Var, Lit> lits1;
        for (const Entry& e : it1->second.entries())
          if (e.is_literal()) lits1.emplace(e.lit().var(), e.lit());
        Overlap ov;
        ov.c1 = it1->first;
        ov.c2 = it2->first;
        std::set<Var> counted;
        for (const Entry& e : it2->second.entries()) {
          if (!e.is_literal()) continue;
          const Lit l2 = e.lit();
          auto f1 = lits1.find(l2.var());
          if (f1 == lits1.end() || counted.count(l2.var())) continue;
          counted.insert(l2.var());
          if (f1->second == l2)
            ov.same.push_back(f1->second);
          else
            ov.flipped.push_back(f1->second);
        }
        if (ov.same.size() + ov.flipped.size() >= 2 && pred(ov)) return ov;
      }
    }
    return std::nullopt;
  }

  bool try_line11() {
    auto ov = find_overlap([](const Overlap& o) { return o.same.size() >= 2; });
    if (!ov) return false;
    const Var vx = ov->same[0].var();
    const Var vy = ov->same[1].var();
    auto third = [&](int cid) -> Lit {
      for (const Entry& e : f_.clause(cid).entries())
        if (e.is_literal() && e.lit().var() != vx && e.lit().var() != vy) return e.lit();
      throw ContractError("overlap: no third literal");
    };
    const Lit z = third(ov->c1);
    const Lit w = third(ov->c2);
    if (z.var() == w.var()) {
      if (z == w) {
        f_.remove_clause(ov->c2);  // duplicate clause
      } else {
        status_ = SimplifyStatus::unsat;  // thirds complementary: z = ~z forced
      }
      return true;
    }
    link(card_, z, w);
    f_.substitute_literal(w.var(), w.positive() ? z : ~z);
    f_.remove_clause(ov->c2);
    return true;
  }

  bool try_line12() {
    auto ov = find_overlap(
        [](const Overlap& o) { return !o.same.empty() && !o.flipped.empty(); });
    if (!ov) return false;
    assign(ov->same[0], false);
    return true;
  }

  bool try_line13() {
    auto ov = find_overlap([](const Overlap& o) { return o.flipped.size() >= 2; });
    if (!ov) return false;
    link_equivalent(ov->flipped[0], ov->flipped[1]);
    return true;
  }

  bool try_line14() {
    for (Var v : f_.variables()) {
      if (f_.occurrences(v) < 3) continue;
      std::set<Var> base{v};
      for (int cid : f_.clauses_of(v))
        for (Var u : f_.clause(cid).vars()) base.insert(u);
      if (fire_contraction(base)) return true;
      std::set<Var> touchers;
      for (Var w : base)
        for (int cid : f_.clauses_of(w))
          for (Var u : f_.clause(cid).vars())
            if (!base.count(u)) touchers.insert(u);
      for (Var u : touchers) {
        std::set<Var> extended = base;
        extended.insert(u);
        if (fire_contraction(extended)) return true;
      }
    }
    return false;
  }

  bool fire_contraction(const std::set<Var>& I) {
    if (static_cast<int>(I.size()) < 3 || static_cast<int>(I.size()) > cfg_.contraction_cap)
      return false;
    std::set<Var> interface;
    for (Var w : I) {
      bool boundary = false;
      for (int cid : f_.clauses_of(w)) {
        for (Var u : f_.clause(cid).vars())
          if (!I.count(u)) {
            boundary = true;
            break;
          }
        if (boundary) break;
      }
      if (boundary) interface.insert(w);
    }
    if (interface.size() != 1) return false;
    contract_semi_isolated(f_, card_, I, *interface.begin(), cfg_.contraction_cap);
    if (stats_) ++stats_->contractions;
    return true;
  }

  // q is equivalent to ~p: p absorbs q's weights and q's variable is rewritten.
  void link_equivalent(Lit p, Lit q) {
    link(card_, p, ~q);
    f_.substitute_literal(q.var(), q.positive() ? ~p : p);
  }

  Formula& f_;
  CardinalityVector<Value>& card_;
  SolveStats* stats_;
  SimplifyConfig cfg_;
  SimplifyStatus status_ = SimplifyStatus::reduced;
  Value mult_{1};
};

// Rule-group entry points. Each runs its lines to a local fixpoint (with the
// Line-1 termination checks) and reports the accumulated multiplier.
template <class Value>
SimplifyOutcome<Value> reduce_constants(Formula& f, CardinalityVector<Value>& c) {
  return Simplifier<Value>(f, c).run(kConstantLines);
}
template <class Value>
SimplifyOutcome<Value> reduce_two_literal(Formula& f, CardinalityVector<Value>& c) {
  return Simplifier<Value>(f, c).run(kTwoLiteralLines);
}
template <class Value>
SimplifyOutcome<Value> reduce_intra_clause(Formula& f, CardinalityVector<Value>& c) {
  return Simplifier<Value>(f, c).run(kIntraClauseLines);
}
template <class Value>
SimplifyOutcome<Value> merge_singletons(Formula& f, CardinalityVector<Value>& c) {
  return Simplifier<Value>(f, c).run(kSingletonLines);
}
template <class Value>
SimplifyOutcome<Value> resolve_overlaps(Formula& f, CardinalityVector<Value>& c) {
  return Simplifier<Value>(f, c).run(kOverlapLines);
}
template <class Value>
SimplifyOutcome<Value> simplify_fixpoint(Formula& f, CardinalityVector<Value>& c,
                                         SolveStats* stats = nullptr, SimplifyConfig cfg = {}) {
  return Simplifier<Value>(f, c, stats, cfg).run();
}

}  // namespace xcount
