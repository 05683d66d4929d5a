#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "xcount/literal.hpp"

namespace xcount {

// A clause of 1..3 entries under exactly-one-true semantics. Ids are assigned
// once and never reused; linking rewrites literals in place and keeps the id.
class Clause {
 public:
  Clause(int id, std::vector<Entry> entries) : id_(id), entries_(std::move(entries)) {}

  int id() const { return id_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  std::set<Var> vars() const {
    std::set<Var> out;
    for (const Entry& e : entries_)
      if (e.is_literal()) out.insert(e.lit().var());
    return out;
  }

  bool has_constant() const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [](const Entry& e) { return e.is_constant(); });
  }
  bool has_constant(bool value) const {
    return std::any_of(entries_.begin(), entries_.end(), [value](const Entry& e) {
      return e.is_constant() && e.value() == value;
    });
  }
  bool all_constants() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Entry& e) { return e.is_constant(); });
  }

  // Exactly-one-true achievable by assigning this clause's own variables?
  // Enumerates the <= 8 assignments of its distinct variables.
  bool locally_exact_satisfiable() const {
    const std::set<Var> vset = vars();
    const std::vector<Var> vs(vset.begin(), vset.end());
    const int k = static_cast<int>(vs.size());
    for (int bits = 0; bits < (1 << k); ++bits) {
      int true_count = 0;
      for (const Entry& e : entries_) {
        bool t;
        if (e.is_constant()) {
          t = e.value();
        } else {
          const Lit l = e.lit();
          const int pos = static_cast<int>(std::find(vs.begin(), vs.end(), l.var()) - vs.begin());
          const bool val = (bits >> pos) & 1;
          t = l.positive() ? val : !val;
        }
        if (t) ++true_count;
      }
      if (true_count == 1) return true;
    }
    return false;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += " v ";
      s += entries_[i].str();
    }
    return s + ")";
  }

 private:
  friend class Formula;
  int id_;
  std::vector<Entry> entries_;
};

}  // namespace xcount
