#pragma once

#include <vector>

#include "xcount/formula.hpp"

namespace xcount {

// Graph over the degree-3 clauses of a formula at the simplification
// fixpoint: an edge per shared variable or per connecting chain of degree-2
// clauses. Maximum vertex degree is 3 by construction; a chain from a clause
// back to itself is reported as a self-loop, not an edge.
struct ClauseGraph {
  struct Edge {
    enum class Kind { shared_var, chain };
    Kind kind;
    int a = 0, b = 0;        // endpoint clause ids, a <= b
    Var var_a = 0, var_b = 0;  // branchable end variable at each endpoint
    std::vector<int> chain;  // degree-2 clause ids ordered a -> b (empty for shared_var)
  };
  struct SelfLoop {
    int clause = 0;
    Var end_first = 0, end_last = 0;  // the two loop variables of the clause
    std::vector<int> chain;           // ordered from end_first to end_last
  };

  std::vector<int> vertices;  // ascending degree-3 clause ids
  std::vector<Edge> edges;
  std::vector<SelfLoop> self_loops;

  bool has_vertex(int id) const;
  int degree(int id) const;  // edge endpoints plus 2 per self-loop
};

// Requires every variable to occur at most twice (Lines 15-16 exhausted).
ClauseGraph build_clause_graph(const Formula& f);

}  // namespace xcount
