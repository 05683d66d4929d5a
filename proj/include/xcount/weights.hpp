#pragma once

#include <map>

#include "xcount/literal.hpp"

namespace xcount {

// Per-literal integer weights (nonnegative after the parse-time shift).
struct WeightAssignment {
  std::map<int, long long> values;  // literal code -> weight; absent means 0

  long long get(Lit l) const {
    auto it = values.find(l.code());
    return it == values.end() ? 0 : it->second;
  }
  void set(Lit l, long long w) { values[l.code()] = w; }
};

}  // namespace xcount
