#include "xcount/tau.hpp"

#include <algorithm>
#include <cmath>

#include "xcount/errors.hpp"

namespace xcount {

double branching_factor(const BranchingVector& v) {
  if (v.removals.size() < 2) throw InputError("branching vector needs at least two entries");
  for (int t : v.removals)
    if (t < 1) throw InputError("branching vector entries must be positive");

  const auto value = [&](double x) {
    double s = -1.0;
    for (int t : v.removals) s += std::pow(x, -t);
    return s;
  };

  // sum x^{-t_i} is strictly decreasing for x > 1; value(1) = r-1 > 0
  double lo = 1.0;
  double hi = std::pow(2.0, *std::max_element(v.removals.begin(), v.removals.end()));
  while (value(hi) > 0) hi *= 2;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    if (value(mid) > 0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace xcount
