#include "xcount/oracle.hpp"

#include <vector>

#include "xcount/errors.hpp"

namespace xcount {

namespace {

struct EnumSetup {
  std::vector<Var> vars;  // bit position -> variable, ascending
  // per clause: constant-true count, and per literal entry (bit, positive)
  struct ClauseBits {
    int const_true = 0;
    std::vector<std::pair<int, bool>> lits;
  };
  std::vector<ClauseBits> clauses;
};

EnumSetup prepare(const Formula& f, const std::set<Var>& universe, int cap) {
  if (static_cast<int>(universe.size()) > cap)
    throw InputError("oracle: " + std::to_string(universe.size()) +
                     " variables exceed the cap of " + std::to_string(cap));
  EnumSetup s;
  s.vars.assign(universe.begin(), universe.end());
  std::map<Var, int> bit;
  for (std::size_t i = 0; i < s.vars.size(); ++i) bit[s.vars[i]] = static_cast<int>(i);
  for (const auto& [id, c] : f.clauses()) {
    EnumSetup::ClauseBits cb;
    for (const Entry& e : c.entries()) {
      if (e.is_constant()) {
        if (e.value()) ++cb.const_true;
      } else {
        auto it = bit.find(e.lit().var());
        if (it == bit.end()) throw ContractError("oracle: clause variable outside universe");
        cb.lits.emplace_back(it->second, e.lit().positive());
      }
    }
    s.clauses.push_back(std::move(cb));
  }
  return s;
}

bool exactly_one_true_everywhere(const EnumSetup& s, std::uint64_t a) {
  for (const auto& cb : s.clauses) {
    int t = cb.const_true;
    for (auto [b, positive] : cb.lits)
      if (((a >> b) & 1) == static_cast<std::uint64_t>(positive)) ++t;
    if (t != 1) return false;
  }
  return true;
}

}  // namespace

Natural brute_count(const Formula& f, const CardinalityVector<Natural>& card, int cap) {
  const EnumSetup s = prepare(f, card.domain(), cap);
  const std::uint64_t total = std::uint64_t{1} << s.vars.size();
  const bool unit = card.all_ones();
  Natural sum(0);
  for (std::uint64_t a = 0; a < total; ++a) {
    if (!exactly_one_true_everywhere(s, a)) continue;
    if (unit) {
      sum += 1;
    } else {
      Natural prod(1);
      for (std::size_t i = 0; i < s.vars.size(); ++i)
        prod *= card.get(Lit(s.vars[i], ((a >> i) & 1) != 0));
      sum += prod;
    }
  }
  return sum;
}

WeightPolynomial brute_count_by_weight(const Formula& f, const WeightAssignment& w, int cap) {
  const std::set<Var> universe = f.variables();
  const EnumSetup s = prepare(f, universe, cap);
  const std::uint64_t total = std::uint64_t{1} << s.vars.size();
  std::map<long long, Natural> coeffs;
  for (std::uint64_t a = 0; a < total; ++a) {
    if (!exactly_one_true_everywhere(s, a)) continue;
    long long k = 0;
    for (std::size_t i = 0; i < s.vars.size(); ++i)
      k += w.get(Lit(s.vars[i], ((a >> i) & 1) != 0));
    coeffs[k] += 1;
  }
  WeightPolynomial out;
  for (const auto& [k, a] : coeffs) out += WeightPolynomial::monomial(a, k);
  return out;
}

MaxWeightPair brute_max_weight(const Formula& f, const WeightAssignment& w, int cap) {
  const std::set<Var> universe = f.variables();
  const EnumSetup s = prepare(f, universe, cap);
  const std::uint64_t total = std::uint64_t{1} << s.vars.size();
  bool any = false;
  long long best = 0;
  Natural count(0);
  for (std::uint64_t a = 0; a < total; ++a) {
    if (!exactly_one_true_everywhere(s, a)) continue;
    long long k = 0;
    for (std::size_t i = 0; i < s.vars.size(); ++i)
      k += w.get(Lit(s.vars[i], ((a >> i) & 1) != 0));
    if (!any || k > best) {
      any = true;
      best = k;
      count = 1;
    } else if (k == best) {
      count += 1;
    }
  }
  if (!any) return MaxWeightPair();
  return MaxWeightPair(count, best);
}

}  // namespace xcount
