#pragma once

#include <map>
#include <set>
#include <vector>

#include "xcount/clause.hpp"
#include "xcount/literal.hpp"

namespace xcount {

// A multiset of clauses keyed by stable id, with a per-variable occurrence
// index that mirrors the literal entries exactly. All iteration is by
// ascending id so that every derived result is deterministic.
class Formula {
 public:
  Formula() = default;

  int add_clause(std::vector<Entry> entries);
  void add_clause_with_id(int id, std::vector<Entry> entries);
  void remove_clause(int id);

  // Replace every literal of v by the constant it evaluates to under v=value.
  void substitute_constant(Var v, bool value);
  // Replace every literal of v: +v becomes image, -v becomes ~image.
  void substitute_literal(Var v, Lit image);

  void remove_entry(int clause_id, std::size_t index);
  void strip_false_constants(int clause_id);

  bool contains(int id) const { return clauses_.find(id) != clauses_.end(); }
  const Clause& clause(int id) const;  // unknown id -> ContractError
  const std::map<int, Clause>& clauses() const { return clauses_; }
  std::size_t clause_count() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }

  // Number of clauses containing v in either polarity; unknown v -> ContractError.
  int occurrences(Var v) const;
  bool has_var(Var v) const { return occ_.find(v) != occ_.end(); }
  const std::set<int>& clauses_of(Var v) const;

  std::set<Var> variables() const;
  std::size_t variable_count() const { return occ_.size(); }
  Var max_var() const;

  // Number of distinct other clauses sharing at least one variable with id.
  int clause_degree(int id) const;

  // Clause ids grouped into maximal variable-connected sets, each ascending,
  // groups ordered by smallest member.
  std::vector<std::vector<int>> component_clause_ids() const;
  std::vector<Formula> connected_components() const;
  Formula restricted_to(const std::vector<int>& clause_ids) const;

  // Rebuild the occurrence index from clause contents and compare.
  bool index_consistent() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  void index_add(const Clause& c);
  void index_remove(const Clause& c);

  std::map<int, Clause> clauses_;
  std::map<Var, std::set<int>> occ_;
  int next_id_ = 1;
};

}  // namespace xcount
