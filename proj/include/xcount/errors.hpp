#pragma once

#include <stdexcept>
#include <string>

namespace xcount {

// Violated precondition or internal invariant of an operation.
struct ContractError : std::logic_error {
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// Malformed user-supplied value (weights out of range, bad generator parameters, ...).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed instance text; carries the 1-based input line.
struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

}  // namespace xcount
