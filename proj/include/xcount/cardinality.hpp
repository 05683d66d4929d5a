#pragma once

#include <gmpxx.h>

#include <map>
#include <set>
#include <utility>

#include "xcount/errors.hpp"
#include "xcount/literal.hpp"

namespace xcount {

// Exact nonnegative counts.
using Natural = mpz_class;

// Maps each live literal (both polarities of every unassigned variable) to a
// count value. The value type is the counting domain: Natural for plain
// counting, WeightPolynomial for per-weight counting, MaxWeightPair for
// maximum-weight counting.
template <class Value>
class CardinalityVector {
 public:
  CardinalityVector() = default;

  static CardinalityVector all_ones(const std::set<Var>& vars) {
    CardinalityVector c;
    for (Var v : vars) c.entries_.emplace(v, std::make_pair(Value(1), Value(1)));
    return c;
  }

  bool has_var(Var v) const { return entries_.find(v) != entries_.end(); }

  const Value& get(Lit l) const {
    auto it = entries_.find(l.var());
    if (it == entries_.end())
      throw ContractError("cardinality: unknown variable " + std::to_string(l.var()));
    return l.positive() ? it->second.first : it->second.second;
  }

  void set(Lit l, Value v) {
    auto it = entries_.find(l.var());
    if (it == entries_.end())
      throw ContractError("cardinality: unknown variable " + std::to_string(l.var()));
    (l.positive() ? it->second.first : it->second.second) = std::move(v);
  }

  void insert_var(Var v, Value pos, Value neg) {
    entries_[v] = {std::move(pos), std::move(neg)};
  }

  void erase_var(Var v) { entries_.erase(v); }

  std::set<Var> domain() const {
    std::set<Var> out;
    for (const auto& [v, p] : entries_) out.insert(v);
    return out;
  }
  std::size_t domain_size() const { return entries_.size(); }

  CardinalityVector restricted_to(const std::set<Var>& vars) const {
    CardinalityVector out;
    for (Var v : vars) {
      auto it = entries_.find(v);
      if (it == entries_.end())
        throw ContractError("cardinality restrict: unknown variable " + std::to_string(v));
      out.entries_.insert(*it);
    }
    return out;
  }

  bool all_ones() const {
    for (const auto& [v, p] : entries_)
      if (!(p.first == Value(1) && p.second == Value(1))) return false;
    return true;
  }

  const std::map<Var, std::pair<Value, Value>>& entries() const { return entries_; }

  friend bool operator==(const CardinalityVector& a, const CardinalityVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::map<Var, std::pair<Value, Value>> entries_;
};

// The paper's Link: x absorbs y after deducing x=y. c(x) *= c(y),
// c(xbar) *= c(ybar); y's entries are dropped. For x=~y pass ~y.
template <class Value>
void link(CardinalityVector<Value>& c, Lit x, Lit y) {
  if (x.var() == y.var()) throw ContractError("link: literals share a variable");
  Value px = c.get(x) * c.get(y);
  Value nx = c.get(~x) * c.get(~y);
  c.set(x, std::move(px));
  c.set(~x, std::move(nx));
  c.erase_var(y.var());
}

}  // namespace xcount
