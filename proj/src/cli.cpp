#include "xcount/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "xcount/counter.hpp"
#include "xcount/errors.hpp"
#include "xcount/instance.hpp"
#include "xcount/oracle.hpp"
#include "xcount/tau.hpp"

namespace xcount {

namespace {

using json = nlohmann::ordered_json;

struct RunOpts {
  std::string input = "-";
  std::string format = "text";
  std::uint64_t seed = 1;
  int contraction_cap = 20;
  long long qbound = -1;  // -1: default n^2
  bool stats = false;
  bool dimacs_cnf = false;
  std::string bisection = "local";
  int restarts = 16;
};

void add_run_options(CLI::App* cmd, RunOpts& o) {
  cmd->add_option("--input,-i", o.input, "instance file, or - for stdin");
  cmd->add_option("--format,-f", o.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed", o.seed, "bisection seed");
  cmd->add_option("--contraction-cap", o.contraction_cap,
                  "largest semi-isolated set contracted");
  cmd->add_option("--qbound", o.qbound, "maximum literal weight (default n^2)");
  cmd->add_flag("--stats", o.stats, "include solve statistics");
  cmd->add_flag("--dimacs-cnf", o.dimacs_cnf, "accept a 'p cnf' header");
  cmd->add_option("--bisection", o.bisection, "bisection strategy: local or random")
      ->check(CLI::IsMember({"local", "random"}));
  cmd->add_option("--bisection-restarts", o.restarts, "local-search restarts");
}

SolverOptions solver_options(const RunOpts& o) {
  SolverOptions s;
  s.simplify.contraction_cap = o.contraction_cap;
  s.seed = o.seed;
  s.bisection_restarts = o.restarts;
  s.bisection_mode = o.bisection == "random" ? BisectionMode::random_partition
                                             : BisectionMode::local_search;
  return s;
}

InstanceDocument load_instance(const RunOpts& o, std::istream* input) {
  if (o.input == "-") {
    if (!input) throw InputError("no standard input available for '-'");
    return parse_instance(*input, o.dimacs_cnf);
  }
  std::ifstream in(o.input);
  if (!in) throw InputError("cannot open input file: " + o.input);
  return parse_instance(in, o.dimacs_cnf);
}

json stats_to_json(const SolveStats& s) {
  json firing = json::object();
  for (const auto& [line, n] : s.rule_firings) firing[std::to_string(line)] = n;
  json j;
  j["leaves"] = s.leaves;
  j["branch_nodes"] = s.branch_nodes;
  j["component_splits"] = s.component_splits;
  j["rule_firings"] = firing;
  j["contractions"] = s.contractions;
  j["self_loops_resolved"] = s.self_loops_resolved;
  j["bisections"] = s.bisections;
  j["m3_history"] = s.m3_history;
  j["cut_history"] = s.cut_history;
  j["line15"] = {{"branches", s.line15_branches},
                 {"violations", s.line15_threshold_violations},
                 {"min_removed", s.line15_min_removed}};
  return j;
}

void print_stats_text(std::ostream& out, const SolveStats& s) {
  out << "leaves            " << s.leaves << "\n";
  out << "branch nodes      " << s.branch_nodes << "\n";
  out << "component splits  " << s.component_splits << "\n";
  out << "rule firings      ";
  bool first = true;
  for (const auto& [line, n] : s.rule_firings) {
    if (!first) out << " ";
    out << line << ":" << n;
    first = false;
  }
  out << "\n";
  out << "contractions      " << s.contractions << "\n";
  out << "self loops        " << s.self_loops_resolved << "\n";
  out << "bisections        " << s.bisections << "\n";
  out << "m3 history        ";
  for (std::size_t i = 0; i < s.m3_history.size(); ++i) out << (i ? " " : "") << s.m3_history[i];
  out << "\n";
  out << "cut history       ";
  for (std::size_t i = 0; i < s.cut_history.size(); ++i)
    out << (i ? " " : "") << s.cut_history[i];
  out << "\n";
  out << "line15            branches=" << s.line15_branches
      << " violations=" << s.line15_threshold_violations
      << " min_removed=" << s.line15_min_removed << "\n";
}

long long universe_size(const Formula& f) { return static_cast<long long>(f.variable_count()); }

int run_count(const RunOpts& o, std::ostream& out, std::istream* input, bool force_stats) {
  const InstanceDocument doc = load_instance(o, input);
  const Formula f = to_formula(doc);
  const auto result = count_models(f, solver_options(o));
  const bool with_stats = o.stats || force_stats;
  if (o.format == "json") {
    json j;
    j["mode"] = "count";
    j["n"] = doc.num_vars;
    j["m"] = doc.clauses.size();
    j["count"] = result.value.get_str();
    j["stats"] = stats_to_json(result.stats);
    out << j.dump(2) << "\n";
  } else {
    out << result.value.get_str() << "\n";
    if (with_stats) print_stats_text(out, result.stats);
  }
  return 0;
}

int run_weighted(const RunOpts& o, std::ostream& out, std::istream* input) {
  const InstanceDocument doc = load_instance(o, input);
  const Formula f = to_formula(doc);
  const WeightAssignment w = to_weight_assignment(doc);
  const long long qbound =
      o.qbound >= 0 ? o.qbound
                    : static_cast<long long>(doc.num_vars) * doc.num_vars;
  const auto result = count_by_weight(f, w, qbound, solver_options(o));
  const long long unshift = doc.weight_shift * universe_size(f);

  std::vector<std::pair<long long, Natural>> coeffs;
  for (long long k = 0; k <= result.value.degree(); ++k)
    if (result.value.coeff(static_cast<std::size_t>(k)) != 0)
      coeffs.emplace_back(k - unshift, result.value.coeff(static_cast<std::size_t>(k)));

  if (o.format == "json") {
    json arr = json::array();
    for (const auto& [k, a] : coeffs) arr.push_back({k, a.get_str()});
    json j;
    j["mode"] = "weighted";
    j["n"] = doc.num_vars;
    j["m"] = doc.clauses.size();
    j["qbound"] = qbound;
    j["weight_shift"] = doc.weight_shift;
    j["coefficients"] = arr;
    j["total"] = result.value.sum_of_coefficients().get_str();
    j["stats"] = stats_to_json(result.stats);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [k, a] : coeffs) out << k << " " << a.get_str() << "\n";
    out << "total " << result.value.sum_of_coefficients().get_str() << "\n";
    if (o.stats) print_stats_text(out, result.stats);
  }
  return 0;
}

int run_maxweight(const RunOpts& o, std::ostream& out, std::istream* input) {
  const InstanceDocument doc = load_instance(o, input);
  const Formula f = to_formula(doc);
  const WeightAssignment w = to_weight_assignment(doc);
  const auto result = count_max_weight(f, w, solver_options(o));
  const long long unshift = doc.weight_shift * universe_size(f);
  const bool sat = !result.value.is_zero();
  const long long weight = sat ? result.value.weight() - unshift : 0;
  if (o.format == "json") {
    json j;
    j["mode"] = "maxweight";
    j["n"] = doc.num_vars;
    j["m"] = doc.clauses.size();
    j["count"] = result.value.count().get_str();
    j["weight"] = weight;
    j["weight_shift"] = doc.weight_shift;
    j["stats"] = stats_to_json(result.stats);
    out << j.dump(2) << "\n";
  } else {
    out << "count " << result.value.count().get_str() << "\n";
    out << "weight " << weight << "\n";
    if (o.stats) print_stats_text(out, result.stats);
  }
  return 0;
}

struct VerifyOpts {
  int instances = 100;
  int n_min = 3;
  int n_max = 16;
  std::uint64_t seed = 1;
  std::string mode = "all";
  int oracle_cap = kDefaultOracleCap;
  long long weight_max = 5;
};

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  return a ^ (b * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull);
}

int run_verify(const RunOpts& o, const VerifyOpts& v, std::ostream& out, std::ostream& err,
               std::istream* input) {
  const bool do_count = v.mode == "all" || v.mode == "count";
  const bool do_weighted = v.mode == "all" || v.mode == "weighted";
  const bool do_max = v.mode == "all" || v.mode == "maxweight";
  long long checks = 0;

  auto verify_one = [&](const InstanceDocument& doc, long long index) -> bool {
    const Formula f = to_formula(doc);
    const auto opts = solver_options(o);
    const auto ones = CardinalityVector<Natural>::all_ones(f.variables());
    if (do_count) {
      const Natural got = count_models(f, ones, opts).value;
      const Natural want = brute_count(f, ones, v.oracle_cap);
      ++checks;
      if (got != want) {
        err << "mismatch (count) on instance " << index << ": solver " << got.get_str()
            << ", oracle " << want.get_str() << "\n"
            << serialize_instance(doc);
        return false;
      }
    }
    if (do_weighted) {
      const WeightAssignment w = to_weight_assignment(doc);
      const long long qbound = std::max<long long>(
          v.weight_max, static_cast<long long>(doc.num_vars) * doc.num_vars);
      const auto got = count_by_weight(f, w, qbound, opts).value;
      const auto want = brute_count_by_weight(f, w, v.oracle_cap);
      const Natural plain = count_models(f, ones, opts).value;
      ++checks;
      if (got != want || got.sum_of_coefficients() != plain) {
        err << "mismatch (weighted) on instance " << index << ": solver " << got.str()
            << ", oracle " << want.str() << ", unweighted " << plain.get_str() << "\n"
            << serialize_instance(doc);
        return false;
      }
    }
    if (do_max) {
      const WeightAssignment w = to_weight_assignment(doc);
      const auto got = count_max_weight(f, w, opts).value;
      const auto want = brute_max_weight(f, w, v.oracle_cap);
      ++checks;
      if (got != want) {
        err << "mismatch (maxweight) on instance " << index << ": solver " << got.str()
            << ", oracle " << want.str() << "\n"
            << serialize_instance(doc);
        return false;
      }
    }
    return true;
  };

  if (o.input != "-" || input == nullptr) {
    // no generated batch requested when an explicit file is given
  }
  if (o.input != "-") {
    const InstanceDocument doc = load_instance(o, input);
    if (!verify_one(doc, 0)) return 1;
    out << "verified 1 instance (" << checks << " checks): all match\n";
    return 0;
  }

  for (int i = 0; i < v.instances; ++i) {
    std::mt19937_64 meta(mix(v.seed, static_cast<std::uint64_t>(i)));
    const int span = v.n_max - v.n_min + 1;
    const int n = v.n_min + static_cast<int>(meta() % static_cast<std::uint64_t>(span));
    const int m = 1 + static_cast<int>(meta() % static_cast<std::uint64_t>(2 * n));
    const bool distinct = (meta() & 1) != 0;
    InstanceDocument doc = generate_instance(n, m, meta(), distinct);
    if (do_weighted || do_max) {
      doc.weighted = true;
      for (int var = 1; var <= n; ++var)
        for (int sign : {1, -1}) {
          const long long wv =
              static_cast<long long>(meta() % static_cast<std::uint64_t>(v.weight_max + 1));
          if (wv != 0) doc.weights[sign * var] = wv;
        }
    }
    if (!verify_one(doc, i)) return 1;
  }
  out << "verified " << v.instances << " instances (" << checks << " checks): all match\n";
  return 0;
}

int run_gen(int n, int m, std::uint64_t seed, bool distinct, const std::string& output,
            std::ostream& out) {
  const InstanceDocument doc = generate_instance(n, m, seed, distinct);
  const std::string text = serialize_instance(doc);
  if (output.empty() || output == "-") {
    out << text;
  } else {
    std::ofstream f(output);
    if (!f) throw InputError("cannot open output file: " + output);
    f << text;
  }
  return 0;
}

int run_tau(const std::vector<int>& removals, double bound, bool has_bound, std::ostream& out) {
  const double beta = branching_factor(BranchingVector{removals});
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(9);
  s << beta;
  out << s.str() << "\n";
  if (has_bound) {
    const bool ok = beta <= bound;
    out << "tau <= " << bound << ": " << (ok ? "yes" : "no") << "\n";
    return ok ? 0 : 1;
  }
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                std::istream* input) {
  CLI::App app{"exact model counter for X3SAT (exactly-one-in-three satisfiability)"};
  app.name("xcount");
  app.require_subcommand(1);

  RunOpts count_o, weighted_o, maxweight_o, stats_o, verify_o;
  VerifyOpts verify_v;

  CLI::App* c_count = app.add_subcommand("count", "count exactly satisfying assignments");
  add_run_options(c_count, count_o);
  CLI::App* c_weighted =
      app.add_subcommand("weighted", "count solutions per total literal weight");
  add_run_options(c_weighted, weighted_o);
  CLI::App* c_maxweight =
      app.add_subcommand("maxweight", "count maximum-weight solutions");
  add_run_options(c_maxweight, maxweight_o);
  CLI::App* c_stats = app.add_subcommand("stats", "count and report solve statistics");
  add_run_options(c_stats, stats_o);

  CLI::App* c_verify = app.add_subcommand("verify", "check the solver against the oracle");
  add_run_options(c_verify, verify_o);
  c_verify->add_option("--instances", verify_v.instances, "number of random instances");
  c_verify->add_option("--n-min", verify_v.n_min, "smallest variable count");
  c_verify->add_option("--n-max", verify_v.n_max, "largest variable count");
  c_verify->add_option("--verify-seed", verify_v.seed, "seed for the instance batch");
  c_verify->add_option("--mode", verify_v.mode, "what to check")
      ->check(CLI::IsMember({"all", "count", "weighted", "maxweight"}));
  c_verify->add_option("--oracle-cap", verify_v.oracle_cap, "oracle variable cap");
  c_verify->add_option("--weight-max", verify_v.weight_max, "largest random weight");

  CLI::App* c_gen = app.add_subcommand("gen", "generate a random instance");
  int gen_n = 10, gen_m = 6;
  std::uint64_t gen_seed = 1;
  bool gen_distinct = false;
  std::string gen_output;
  c_gen->add_option("--n", gen_n, "variables")->required();
  c_gen->add_option("--m", gen_m, "clauses")->required();
  c_gen->add_option("--seed", gen_seed, "generator seed");
  c_gen->add_flag("--distinct", gen_distinct, "distinct variables within each clause");
  c_gen->add_option("--output,-o", gen_output, "output file (default stdout)");

  CLI::App* c_tau = app.add_subcommand("tau", "branching factor of a branching vector");
  std::vector<int> tau_removals;
  double tau_bound = 0.0;
  c_tau->add_option("removals", tau_removals, "variables removed per branch")
      ->required()
      ->expected(-2);
  CLI::Option* bound_opt = c_tau->add_option("--bound", tau_bound, "compare against a bound");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (c_count->parsed()) return run_count(count_o, out, input, false);
    if (c_weighted->parsed()) return run_weighted(weighted_o, out, input);
    if (c_maxweight->parsed()) return run_maxweight(maxweight_o, out, input);
    if (c_stats->parsed()) return run_count(stats_o, out, input, true);
    if (c_verify->parsed()) return run_verify(verify_o, verify_v, out, err, input);
    if (c_gen->parsed()) return run_gen(gen_n, gen_m, gen_seed, gen_distinct, gen_output, out);
    if (c_tau->parsed()) return run_tau(tau_removals, tau_bound, bound_opt->count() > 0, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const ContractError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace xcount
