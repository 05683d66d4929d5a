#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "xcount/formula.hpp"
#include "xcount/weights.hpp"

namespace xcount {

// An instance as read from or written to the text format:
//   c <comment>                      (comments; "c meta <key> <value>" round-trips)
//   p x3sat <num_vars> <num_clauses>
//   <lit> [<lit> [<lit>]] 0          (one clause per line, 1..3 literals)
//   w <lit> <weight>                 (optional per-literal weights)
// Raw weights may be negative; parsing shifts every literal by
// s = max(0, -min raw weight) and records s, so solver-facing weights are
// nonnegative. Reported weights are un-shifted by s per variable.
struct InstanceDocument {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;   // signed literal codes
  std::map<int, long long> weights;        // literal code -> shifted weight
  long long weight_shift = 0;              // applied to every literal
  bool weighted = false;                   // any weight line present
  std::map<std::string, std::string> metadata;

  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

InstanceDocument parse_instance(std::istream& in, bool accept_cnf_header = false);
InstanceDocument parse_instance(const std::string& text, bool accept_cnf_header = false);
std::string serialize_instance(const InstanceDocument& doc);

// m clauses of three uniformly drawn literals over n variables, reproducible
// from the seed; with distinct_vars no clause repeats a variable.
InstanceDocument generate_instance(int n, int m, std::uint64_t seed, bool distinct_vars);

Formula to_formula(const InstanceDocument& doc);
// Shifted weights for both polarities of every variable occurring in the
// formula (absent raw weights count as 0 before the shift).
WeightAssignment to_weight_assignment(const InstanceDocument& doc);

}  // namespace xcount
