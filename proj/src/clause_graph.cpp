#include "xcount/clause_graph.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "xcount/errors.hpp"

namespace xcount {

bool ClauseGraph::has_vertex(int id) const {
  return std::binary_search(vertices.begin(), vertices.end(), id);
}

int ClauseGraph::degree(int id) const {
  int d = 0;
  for (const Edge& e : edges) d += (e.a == id) + (e.b == id);
  for (const SelfLoop& l : self_loops) d += 2 * (l.clause == id);
  return d;
}

namespace {

// The clause sharing variable v with `from`, if any. At most one exists since
// every variable occurs at most twice.
int other_clause_via(const Formula& f, int from, Var v) {
  for (int id : f.clauses_of(v))
    if (id != from) return id;
  return 0;
}

}  // namespace

ClauseGraph build_clause_graph(const Formula& f) {
  for (Var v : f.variables())
    if (f.occurrences(v) > 2)
      throw ContractError("clause graph: variable " + std::to_string(v) +
                          " occurs more than twice");

  ClauseGraph g;
  std::set<int> deg3;
  for (const auto& [id, c] : f.clauses())
    if (f.clause_degree(id) == 3) deg3.insert(id);
  g.vertices.assign(deg3.begin(), deg3.end());

  // Shared-variable edges between two degree-3 clauses.
  for (int a : g.vertices) {
    for (Var v : f.clause(a).vars()) {
      const int b = other_clause_via(f, a, v);
      if (b > a && deg3.count(b)) {
        ClauseGraph::Edge e;
        e.kind = ClauseGraph::Edge::Kind::shared_var;
        e.a = a;
        e.b = b;
        e.var_a = e.var_b = v;
        g.edges.push_back(std::move(e));
      }
    }
  }

  // Chain edges: walk through degree-2 clauses until another degree-3 clause
  // (or the start clause itself: a self-loop). Each degree-2 clause belongs to
  // exactly one chain, so consumed ids also deduplicate discovery from the
  // other end.
  std::set<int> consumed;
  for (int a : g.vertices) {
    for (Var v0 : f.clause(a).vars()) {
      int cur = other_clause_via(f, a, v0);
      if (cur == 0 || deg3.count(cur) || consumed.count(cur)) continue;
      std::vector<int> chain;
      int prev = a;
      Var entry_var = v0;
      for (;;) {
        if (f.clause_degree(cur) != 2)
          throw ContractError("clause graph: dangling degree-" +
                              std::to_string(f.clause_degree(cur)) + " clause " +
                              std::to_string(cur) + " in chain walk");
        chain.push_back(cur);
        // the variable leading onward: shared with a clause other than prev
        Var next_var = 0;
        int next = 0;
        for (Var v : f.clause(cur).vars()) {
          if (v == entry_var) continue;
          const int cand = other_clause_via(f, cur, v);
          if (cand != 0 && cand != prev) {
            next_var = v;
            next = cand;
            break;
          }
        }
        if (next == 0)
          throw ContractError("clause graph: chain walk dead-ends at clause " +
                              std::to_string(cur));
        if (deg3.count(next)) {
          for (int id : chain) consumed.insert(id);
          if (next == a) {
            ClauseGraph::SelfLoop l;
            l.clause = a;
            l.end_first = v0;
            l.end_last = next_var;
            l.chain = std::move(chain);
            g.self_loops.push_back(std::move(l));
          } else {
            ClauseGraph::Edge e;
            e.kind = ClauseGraph::Edge::Kind::chain;
            if (a <= next) {
              e.a = a;
              e.b = next;
              e.var_a = v0;
              e.var_b = next_var;
              e.chain = std::move(chain);
            } else {
              e.a = next;
              e.b = a;
              e.var_a = next_var;
              e.var_b = v0;
              e.chain.assign(chain.rbegin(), chain.rend());
            }
            g.edges.push_back(std::move(e));
          }
          break;
        }
        prev = cur;
        entry_var = next_var;
        cur = next;
      }
    }
  }

  std::sort(g.edges.begin(), g.edges.end(), [](const auto& x, const auto& y) {
    return std::tuple(x.a, x.b, static_cast<int>(x.kind), x.var_a, x.var_b) <
           std::tuple(y.a, y.b, static_cast<int>(y.kind), y.var_a, y.var_b);
  });
  std::sort(g.self_loops.begin(), g.self_loops.end(), [](const auto& x, const auto& y) {
    return std::tuple(x.clause, x.end_first) < std::tuple(y.clause, y.end_first);
  });
  return g;
}

}  // namespace xcount
