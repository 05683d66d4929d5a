#include "xcount/instance.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "xcount/errors.hpp"

namespace xcount {

namespace {

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

long long to_ll(const std::string& t, int line_no, const char* what) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    throw ParseError(line_no, std::string("expected ") + what + ", got '" + t + "'");
  }
  if (pos != t.size())
    throw ParseError(line_no, std::string("expected ") + what + ", got '" + t + "'");
  return v;
}

}  // namespace

InstanceDocument parse_instance(std::istream& in, bool accept_cnf_header) {
  InstanceDocument doc;
  std::map<int, long long> raw_weights;
  bool have_header = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks[0] == "c") {
      if (toks.size() == 4 && toks[1] == "meta") doc.metadata[toks[2]] = toks[3];
      continue;
    }
    if (toks[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (toks.size() != 4) throw ParseError(line_no, "header must be 'p x3sat <n> <m>'");
      if (toks[1] != "x3sat" && !(accept_cnf_header && toks[1] == "cnf"))
        throw ParseError(line_no, "expected format 'x3sat', got '" + toks[1] + "'");
      const long long n = to_ll(toks[2], line_no, "variable count");
      const long long m = to_ll(toks[3], line_no, "clause count");
      if (n < 0 || m < 0) throw ParseError(line_no, "negative header counts");
      doc.num_vars = static_cast<int>(n);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "clause or weight line before header");
    if (toks[0] == "w") {
      if (toks.size() != 3) throw ParseError(line_no, "weight line must be 'w <lit> <weight>'");
      const long long lit = to_ll(toks[1], line_no, "literal");
      if (lit == 0 || std::abs(lit) > doc.num_vars)
        throw ParseError(line_no, "weight literal out of range");
      const long long w = to_ll(toks[2], line_no, "weight");
      if (raw_weights.count(static_cast<int>(lit)))
        throw ParseError(line_no, "duplicate weight for literal " + toks[1]);
      raw_weights[static_cast<int>(lit)] = w;
      doc.weighted = true;
      continue;
    }
    // clause line
    std::vector<int> clause;
    bool terminated = false;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      const long long v = to_ll(toks[i], line_no, "literal");
      if (v == 0) {
        if (i + 1 != toks.size()) throw ParseError(line_no, "tokens after terminating 0");
        terminated = true;
        break;
      }
      if (std::abs(v) > doc.num_vars)
        throw ParseError(line_no, "variable " + std::to_string(std::abs(v)) +
                                      " out of range 1.." + std::to_string(doc.num_vars));
      clause.push_back(static_cast<int>(v));
    }
    if (!terminated) throw ParseError(line_no, "clause line missing terminating 0");
    if (clause.empty() || clause.size() > 3)
      throw ParseError(line_no,
                       "clause has length " + std::to_string(clause.size()) + ", need 1..3");
    doc.clauses.push_back(std::move(clause));
  }
  if (!have_header) throw ParseError(line_no + 1, "missing 'p x3sat' header");

  long long min_w = 0;
  for (const auto& [lit, w] : raw_weights) min_w = std::min(min_w, w);
  doc.weight_shift = -min_w;
  for (const auto& [lit, w] : raw_weights) doc.weights[lit] = w + doc.weight_shift;
  return doc;
}

InstanceDocument parse_instance(const std::string& text, bool accept_cnf_header) {
  std::istringstream in(text);
  return parse_instance(in, accept_cnf_header);
}

std::string serialize_instance(const InstanceDocument& doc) {
  std::ostringstream out;
  for (const auto& [k, v] : doc.metadata) out << "c meta " << k << " " << v << "\n";
  out << "p x3sat " << doc.num_vars << " " << doc.clauses.size() << "\n";
  for (const auto& cl : doc.clauses) {
    for (int lit : cl) out << lit << " ";
    out << "0\n";
  }
  if (doc.weighted) {
    // emit raw (un-shifted) weights so that parsing reproduces the document
    for (const auto& [lit, w] : doc.weights) out << "w " << lit << " " << w - doc.weight_shift
                                                 << "\n";
  }
  return out.str();
}

InstanceDocument generate_instance(int n, int m, std::uint64_t seed, bool distinct_vars) {
  if (n < 3) throw InputError("generator needs n >= 3");
  if (m < 1) throw InputError("generator needs m >= 1");
  InstanceDocument doc;
  doc.num_vars = n;
  std::mt19937_64 rng(seed);
  for (int j = 0; j < m; ++j) {
    std::vector<int> clause;
    for (int k = 0; k < 3; ++k) {
      int v;
      do {
        v = 1 + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(n)));
      } while (distinct_vars && std::any_of(clause.begin(), clause.end(), [v](int lit) {
                 return std::abs(lit) == v;
               }));
      const bool positive = rand_below(rng, 2) == 0;
      clause.push_back(positive ? v : -v);
    }
    doc.clauses.push_back(std::move(clause));
  }
  doc.metadata["generator"] = "uniform";
  doc.metadata["seed"] = std::to_string(seed);
  doc.metadata["distinct"] = distinct_vars ? "1" : "0";
  return doc;
}

Formula to_formula(const InstanceDocument& doc) {
  Formula f;
  for (const auto& cl : doc.clauses) {
    std::vector<Entry> entries;
    for (int lit : cl) entries.push_back(Entry::literal(Lit::from_code(lit)));
    f.add_clause(std::move(entries));
  }
  return f;
}

WeightAssignment to_weight_assignment(const InstanceDocument& doc) {
  WeightAssignment w;
  const Formula f = to_formula(doc);
  for (Var v : f.variables()) {
    for (bool positive : {true, false}) {
      const Lit l(v, positive);
      auto it = doc.weights.find(l.code());
      const long long shifted = it == doc.weights.end() ? doc.weight_shift : it->second;
      w.set(l, shifted);
    }
  }
  return w;
}

}  // namespace xcount
