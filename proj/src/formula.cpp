#include "xcount/formula.hpp"

#include <algorithm>

#include "xcount/errors.hpp"

namespace xcount {

int Formula::add_clause(std::vector<Entry> entries) {
  const int id = next_id_;
  add_clause_with_id(id, std::move(entries));
  return id;
}

void Formula::add_clause_with_id(int id, std::vector<Entry> entries) {
  if (entries.empty() || entries.size() > 3)
    throw ContractError("clause must have 1..3 entries");
  if (contains(id)) throw ContractError("duplicate clause id " + std::to_string(id));
  auto [it, ok] = clauses_.emplace(id, Clause(id, std::move(entries)));
  (void)ok;
  index_add(it->second);
  next_id_ = std::max(next_id_, id + 1);
}

void Formula::remove_clause(int id) {
  auto it = clauses_.find(id);
  if (it == clauses_.end()) throw ContractError("remove_clause: unknown id " + std::to_string(id));
  index_remove(it->second);
  clauses_.erase(it);
}

void Formula::substitute_constant(Var v, bool value) {
  auto it = occ_.find(v);
  if (it == occ_.end()) return;
  const std::set<int> ids = it->second;
  for (int id : ids) {
    Clause& c = clauses_.at(id);
    for (Entry& e : c.entries_)
      if (e.is_literal() && e.lit().var() == v)
        e = Entry::constant(e.lit().positive() ? value : !value);
  }
  occ_.erase(v);
}

void Formula::substitute_literal(Var v, Lit image) {
  if (image.var() == v) throw ContractError("substitute_literal: image uses the same variable");
  auto it = occ_.find(v);
  if (it == occ_.end()) return;
  const std::set<int> ids = it->second;
  for (int id : ids) {
    Clause& c = clauses_.at(id);
    for (Entry& e : c.entries_)
      if (e.is_literal() && e.lit().var() == v)
        e = Entry::literal(e.lit().positive() ? image : ~image);
    occ_[image.var()].insert(id);
  }
  occ_.erase(v);
}

void Formula::remove_entry(int clause_id, std::size_t index) {
  Clause& c = clauses_.at(clause_id);
  if (index >= c.entries_.size()) throw ContractError("remove_entry: index out of range");
  if (c.entries_.size() == 1) throw ContractError("remove_entry: clause would become empty");
  const Entry removed = c.entries_[index];
  c.entries_.erase(c.entries_.begin() + static_cast<std::ptrdiff_t>(index));
  if (removed.is_literal()) {
    const Var v = removed.lit().var();
    bool still = false;
    for (const Entry& e : c.entries_)
      if (e.is_literal() && e.lit().var() == v) still = true;
    if (!still) {
      occ_[v].erase(clause_id);
      if (occ_[v].empty()) occ_.erase(v);
    }
  }
}

void Formula::strip_false_constants(int clause_id) {
  Clause& c = clauses_.at(clause_id);
  auto& es = c.entries_;
  es.erase(std::remove_if(es.begin(), es.end(),
                          [](const Entry& e) { return e.is_constant() && !e.value(); }),
           es.end());
  if (es.empty()) throw ContractError("strip_false_constants: clause became empty");
}

const Clause& Formula::clause(int id) const {
  auto it = clauses_.find(id);
  if (it == clauses_.end()) throw ContractError("unknown clause id " + std::to_string(id));
  return it->second;
}

int Formula::occurrences(Var v) const {
  auto it = occ_.find(v);
  if (it == occ_.end()) throw ContractError("occurrences: unknown variable " + std::to_string(v));
  return static_cast<int>(it->second.size());
}

const std::set<int>& Formula::clauses_of(Var v) const {
  static const std::set<int> kEmpty;
  auto it = occ_.find(v);
  return it == occ_.end() ? kEmpty : it->second;
}

std::set<Var> Formula::variables() const {
  std::set<Var> out;
  for (const auto& [v, ids] : occ_) out.insert(v);
  return out;
}

Var Formula::max_var() const { return occ_.empty() ? 0 : occ_.rbegin()->first; }

int Formula::clause_degree(int id) const {
  const Clause& c = clause(id);
  std::set<int> neighbours;
  for (Var v : c.vars())
    for (int other : clauses_of(v))
      if (other != id) neighbours.insert(other);
  return static_cast<int>(neighbours.size());
}

std::vector<std::vector<int>> Formula::component_clause_ids() const {
  std::vector<std::vector<int>> comps;
  std::set<int> seen;
  for (const auto& [id, c] : clauses_) {
    if (seen.count(id)) continue;
    std::vector<int> stack{id};
    std::set<int> comp;
    seen.insert(id);
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      comp.insert(cur);
      for (Var v : clauses_.at(cur).vars())
        for (int nxt : clauses_of(v))
          if (!seen.count(nxt)) {
            seen.insert(nxt);
            stack.push_back(nxt);
          }
    }
    comps.emplace_back(comp.begin(), comp.end());
  }
  return comps;
}

Formula Formula::restricted_to(const std::vector<int>& clause_ids) const {
  Formula out;
  for (int id : clause_ids) out.add_clause_with_id(id, clause(id).entries());
  out.next_id_ = next_id_;
  return out;
}

std::vector<Formula> Formula::connected_components() const {
  std::vector<Formula> out;
  for (const auto& comp : component_clause_ids()) out.push_back(restricted_to(comp));
  return out;
}

bool Formula::index_consistent() const {
  std::map<Var, std::set<int>> rebuilt;
  for (const auto& [id, c] : clauses_)
    for (const Entry& e : c.entries())
      if (e.is_literal()) rebuilt[e.lit().var()].insert(id);
  return rebuilt == occ_;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.clauses_.size() != b.clauses_.size()) return false;
  for (auto ita = a.clauses_.begin(), itb = b.clauses_.begin(); ita != a.clauses_.end();
       ++ita, ++itb) {
    if (ita->first != itb->first) return false;
    if (!(ita->second.entries() == itb->second.entries())) return false;
  }
  return true;
}

void Formula::index_add(const Clause& c) {
  for (const Entry& e : c.entries())
    if (e.is_literal()) occ_[e.lit().var()].insert(c.id());
}

void Formula::index_remove(const Clause& c) {
  for (const Entry& e : c.entries())
    if (e.is_literal()) {
      auto it = occ_.find(e.lit().var());
      if (it != occ_.end()) {
        it->second.erase(c.id());
        if (it->second.empty()) occ_.erase(it);
      }
    }
}

}  // namespace xcount
