#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "xcount/cardinality.hpp"
#include "xcount/errors.hpp"

namespace xcount {

// Polynomial in a formal variable u with natural coefficients; coefficient
// a_k counts solutions of total true-literal weight k. Stored dense and
// trimmed, so equality is semantic.
class WeightPolynomial {
 public:
  WeightPolynomial() = default;
  explicit WeightPolynomial(int constant) {
    if (constant < 0) throw InputError("polynomial constant must be nonnegative");
    if (constant > 0) coeffs_.push_back(Natural(constant));
  }

  static WeightPolynomial monomial(Natural coeff, long long degree) {
    if (degree < 0) throw InputError("monomial degree must be nonnegative");
    WeightPolynomial p;
    if (coeff != 0) {
      p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Natural(0));
      p.coeffs_.back() = std::move(coeff);
    }
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the highest nonzero term; -1 for the zero polynomial.
  long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }

  const Natural& coeff(std::size_t k) const {
    static const Natural kZero(0);
    return k < coeffs_.size() ? coeffs_[k] : kZero;
  }

  Natural sum_of_coefficients() const {
    Natural s(0);
    for (const Natural& a : coeffs_) s += a;
    return s;
  }

  WeightPolynomial& operator+=(const WeightPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Natural(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  friend WeightPolynomial operator+(WeightPolynomial a, const WeightPolynomial& b) {
    a += b;
    return a;
  }

  friend WeightPolynomial operator*(const WeightPolynomial& a, const WeightPolynomial& b) {
    WeightPolynomial out;
    if (a.is_zero() || b.is_zero()) return out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Natural(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        if (b.coeffs_[j] != 0) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }

  WeightPolynomial& operator*=(const WeightPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const WeightPolynomial& a, const WeightPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const WeightPolynomial& a, const WeightPolynomial& b) {
    return !(a == b);
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      if (!s.empty()) s += " + ";
      s += coeffs_[k].get_str();
      if (k > 0) s += "*u^" + std::to_string(k);
    }
    return s;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Natural> coeffs_;
};

}  // namespace xcount
