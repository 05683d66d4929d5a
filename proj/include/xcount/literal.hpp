#pragma once

#include <cassert>
#include <cstdlib>
#include <string>

namespace xcount {

using Var = int;  // variable ids are positive integers

// A signed literal, stored DIMACS-style as a nonzero integer.
class Lit {
 public:
  Lit() = default;
  Lit(Var v, bool positive) : code_(positive ? v : -v) { assert(v >= 1); }

  static Lit from_code(int code) {
    assert(code != 0);
    Lit l;
    l.code_ = code;
    return l;
  }

  Var var() const { return std::abs(code_); }
  bool positive() const { return code_ > 0; }
  int code() const { return code_; }

  Lit operator~() const { return from_code(-code_); }

  friend bool operator==(Lit a, Lit b) { return a.code_ == b.code_; }
  friend bool operator!=(Lit a, Lit b) { return a.code_ != b.code_; }
  friend bool operator<(Lit a, Lit b) { return a.code_ < b.code_; }

  std::string str() const { return (positive() ? "x" : "~x") + std::to_string(var()); }

 private:
  int code_ = 0;
};

// One clause slot: a literal, or a boolean constant left behind by a substitution.
// Constants exist only transiently between a substitution and the next fixpoint pass.
class Entry {
 public:
  static Entry literal(Lit l) {
    Entry e;
    e.code_ = l.code();
    return e;
  }
  static Entry constant(bool value) {
    Entry e;
    e.code_ = 0;
    e.const_value_ = value;
    return e;
  }

  bool is_literal() const { return code_ != 0; }
  bool is_constant() const { return code_ == 0; }
  Lit lit() const {
    assert(is_literal());
    return Lit::from_code(code_);
  }
  bool value() const {
    assert(is_constant());
    return const_value_;
  }

  friend bool operator==(const Entry& a, const Entry& b) {
    return a.code_ == b.code_ && (a.code_ != 0 || a.const_value_ == b.const_value_);
  }

  std::string str() const {
    if (is_constant()) return const_value_ ? "1" : "0";
    return lit().str();
  }

 private:
  int code_ = 0;  // 0 means constant
  bool const_value_ = false;
};

}  // namespace xcount
