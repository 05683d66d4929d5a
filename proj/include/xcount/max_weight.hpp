#pragma once

#include <string>
#include <utility>

#include "xcount/cardinality.hpp"
#include "xcount/errors.hpp"

namespace xcount {

// (count, weight) pair for maximum-weight counting: count solutions attaining
// the maximum total weight. Addition keeps the heavier side and adds counts on
// ties; multiplication multiplies counts and adds weights. count == 0 forces
// weight == 0, so (0,0) is the absorbing "unsatisfiable" value.
class MaxWeightPair {
 public:
  MaxWeightPair() = default;
  explicit MaxWeightPair(int count) : count_(count) {
    if (count < 0) throw InputError("max-weight count must be nonnegative");
  }
  MaxWeightPair(Natural count, long long weight)
      : count_(std::move(count)), weight_(count_ == 0 ? 0 : weight) {
    if (weight < 0) throw InputError("max-weight weight must be nonnegative");
  }

  const Natural& count() const { return count_; }
  long long weight() const { return weight_; }
  bool is_zero() const { return count_ == 0; }

  friend MaxWeightPair operator+(const MaxWeightPair& a, const MaxWeightPair& b) {
    if (a.is_zero() && b.is_zero()) return MaxWeightPair();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.weight_ == b.weight_) return MaxWeightPair(a.count_ + b.count_, a.weight_);
    return a.weight_ > b.weight_ ? a : b;
  }

  friend MaxWeightPair operator*(const MaxWeightPair& a, const MaxWeightPair& b) {
    if (a.is_zero() || b.is_zero()) return MaxWeightPair();
    return MaxWeightPair(a.count_ * b.count_, a.weight_ + b.weight_);
  }

  MaxWeightPair& operator+=(const MaxWeightPair& o) { return *this = *this + o; }
  MaxWeightPair& operator*=(const MaxWeightPair& o) { return *this = *this * o; }

  friend bool operator==(const MaxWeightPair& a, const MaxWeightPair& b) {
    return a.count_ == b.count_ && a.weight_ == b.weight_;
  }
  friend bool operator!=(const MaxWeightPair& a, const MaxWeightPair& b) { return !(a == b); }

  std::string str() const { return "(" + count_.get_str() + ", " + std::to_string(weight_) + ")"; }

 private:
  Natural count_{0};
  long long weight_ = 0;
};

// Combination of the two branch results for max-weight counting, applying the
// zero/tie/greater rules in order: r0/r1 are the subcounts for x=0 and x=1,
// lit_false/lit_true the (count, weight) entries of the branched literal's
// polarities.
inline MaxWeightPair combine_branch_max_weight(const MaxWeightPair& r0,
                                               const MaxWeightPair& lit_false,
                                               const MaxWeightPair& r1,
                                               const MaxWeightPair& lit_true) {
  return r0 * lit_false + r1 * lit_true;
}

}  // namespace xcount
