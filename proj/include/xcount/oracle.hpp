#pragma once

#include "xcount/cardinality.hpp"
#include "xcount/formula.hpp"
#include "xcount/max_weight.hpp"
#include "xcount/weight_poly.hpp"
#include "xcount/weights.hpp"

namespace xcount {

inline constexpr int kDefaultOracleCap = 24;

// Ground truth by enumeration of all assignments; shares no reduction logic
// with the solver. Exceeding the variable cap raises InputError.
Natural brute_count(const Formula& f, const CardinalityVector<Natural>& card,
                    int cap = kDefaultOracleCap);
WeightPolynomial brute_count_by_weight(const Formula& f, const WeightAssignment& w,
                                       int cap = kDefaultOracleCap);
MaxWeightPair brute_max_weight(const Formula& f, const WeightAssignment& w,
                               int cap = kDefaultOracleCap);

}  // namespace xcount
