#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "xcount/cardinality.hpp"
#include "xcount/formula.hpp"
#include "xcount/instance.hpp"

namespace xcount::test {

// Clauses from signed literal codes, e.g. {{1,2,3},{-1,4,5}}.
inline Formula make_formula(std::initializer_list<std::vector<int>> clauses) {
  Formula f;
  for (const auto& cl : clauses) {
    std::vector<Entry> entries;
    for (int code : cl) entries.push_back(Entry::literal(Lit::from_code(code)));
    f.add_clause(std::move(entries));
  }
  return f;
}

inline CardinalityVector<Natural> ones(const Formula& f) {
  return CardinalityVector<Natural>::all_ones(f.variables());
}

inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * n) >> 64);
}

// Random vector with entries in [0, max_entry].
inline CardinalityVector<Natural> random_card(const Formula& f, std::mt19937_64& rng,
                                              int max_entry = 7) {
  CardinalityVector<Natural> c;
  for (Var v : f.variables())
    c.insert_var(v,
                 Natural(static_cast<unsigned long>(
                     rand_below(rng, static_cast<std::uint64_t>(max_entry + 1)))),
                 Natural(static_cast<unsigned long>(
                     rand_below(rng, static_cast<std::uint64_t>(max_entry + 1)))));
  return c;
}

inline Formula random_formula(std::mt19937_64& rng, int n, int m, bool distinct) {
  return to_formula(generate_instance(n, m, rng(), distinct));
}

// A formula already in the solver's post-simplification normal form: every
// variable occurs at most twice, clauses are variable-distinct, and no two
// clauses share two variables. Built from a configuration model (two slots
// per variable, dealt into triples) with rejection; such instances force the
// branching rules to do all the work.
inline Formula regular_formula(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int m = (2 * n) / 3;
  for (int attempt = 0; attempt < 2000; ++attempt) {
    std::vector<Var> slots;
    for (Var v = 1; v <= n; ++v) {
      slots.push_back(v);
      slots.push_back(v);
    }
    for (std::size_t i = slots.size(); i > 1; --i)
      std::swap(slots[i - 1], slots[rand_below(rng, i)]);

    std::vector<std::vector<Var>> triples;
    bool ok = true;
    for (int j = 0; j < m && ok; ++j) {
      std::vector<Var> t;
      for (int k = 0; k < 3; ++k) {
        // draw the next slot whose variable is not already in the triple
        bool placed = false;
        for (std::size_t probe = 3 * static_cast<std::size_t>(j) + k; probe < slots.size();
             ++probe) {
          const Var v = slots[probe];
          if (std::find(t.begin(), t.end(), v) == t.end()) {
            std::swap(slots[3 * static_cast<std::size_t>(j) + k], slots[probe]);
            t.push_back(v);
            placed = true;
            break;
          }
        }
        if (!placed) ok = false;
        if (!ok) break;
      }
      if (ok) triples.push_back(std::move(t));
    }
    if (!ok) continue;
    // reject builds where two triples share two variables
    for (std::size_t a = 0; a < triples.size() && ok; ++a)
      for (std::size_t b = a + 1; b < triples.size() && ok; ++b) {
        int shared = 0;
        for (Var v : triples[a])
          shared += std::find(triples[b].begin(), triples[b].end(), v) != triples[b].end();
        if (shared >= 2) ok = false;
      }
    if (!ok) continue;

    Formula f;
    for (const auto& t : triples) {
      std::vector<Entry> entries;
      for (Var v : t) entries.push_back(Entry::literal(Lit(v, rand_below(rng, 2) == 0)));
      f.add_clause(std::move(entries));
    }
    return f;
  }
  throw std::runtime_error("regular_formula: construction did not converge");
}

}  // namespace xcount::test
