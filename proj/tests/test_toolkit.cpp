#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <sstream>

#include "helpers.hpp"
#include "xcount/cli.hpp"
#include "xcount/errors.hpp"
#include "xcount/instance.hpp"
#include "xcount/tau.hpp"

using namespace xcount;

namespace {

double residual(double beta, const std::vector<int>& t) {
  double s = -1.0;
  for (int ti : t) s += std::pow(beta, -ti);
  return s;
}

struct CliResult {
  int code = 0;
  std::string out, err;
};

CliResult cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  CliResult r;
  r.code = run_command(args, out, err, &in);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("branching factor roots") {
  CHECK(branching_factor({{1, 1}}) == doctest::Approx(2.0).epsilon(1e-9));
  const double t104 = branching_factor({{10, 4}});
  CHECK(t104 <= 1.1120);
  CHECK(std::abs(residual(t104, {10, 4})) < 1e-8);
  const double t95 = branching_factor({{9, 5}});
  CHECK(t95 <= 1.1074);
  CHECK(std::abs(residual(t95, {9, 5})) < 1e-8);
  const double line17 = std::pow(branching_factor({{8, 8, 10, 10}}), 2.0 / 3.0);
  CHECK(line17 <= 1.1092);
}

TEST_CASE("branching factor is monotone and prefers balance") {
  for (int j = 1; j <= 6; ++j)
    for (int k = 1; k <= 9; ++k)
      CHECK(branching_factor({{k + 1, j}}) < branching_factor({{k, j}}));
  for (int alpha = 2; alpha <= 8; ++alpha)
    for (int d = 1; d < alpha; ++d)
      CHECK(branching_factor({{alpha, alpha}}) <=
            branching_factor({{alpha - d, alpha + d}}) + 1e-12);
}

TEST_CASE("branching factor input validation") {
  CHECK_THROWS_AS(branching_factor({{3}}), InputError);
  CHECK_THROWS_AS(branching_factor({{0, 2}}), InputError);
}

TEST_CASE("parse_instance") {
  SUBCASE("basic clause") {
    const auto doc = parse_instance(std::string("p x3sat 3 1\n1 2 3 0\n"));
    CHECK(doc.num_vars == 3);
    REQUIRE(doc.clauses.size() == 1);
    CHECK(doc.clauses[0] == std::vector<int>{1, 2, 3});
    CHECK_FALSE(doc.weighted);
  }
  SUBCASE("complementary pair clause") {
    const auto doc = parse_instance(std::string("p x3sat 2 1\n1 -1 0\n"));
    CHECK(doc.clauses[0] == std::vector<int>{1, -1});
  }
  SUBCASE("overlong clause is a parse error with its line") {
    try {
      parse_instance(std::string("p x3sat 5 1\n1 2 3 4 0\n"));
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
    }
  }
  SUBCASE("weights shift negatives and record the shift") {
    const auto doc =
        parse_instance(std::string("p x3sat 3 1\n1 2 3 0\nw 1 -2\nw -2 1\n"));
    CHECK(doc.weighted);
    CHECK(doc.weight_shift == 2);
    CHECK(doc.weights.at(1) == 0);
    CHECK(doc.weights.at(-2) == 3);
    const WeightAssignment w = to_weight_assignment(doc);
    CHECK(w.get(Lit(1, true)) == 0);
    CHECK(w.get(Lit(1, false)) == 2);  // unweighted literal, shifted
    CHECK(w.get(Lit(2, false)) == 3);
  }
  SUBCASE("errors carry line numbers") {
    CHECK_THROWS_AS(parse_instance(std::string("1 2 3 0\n")), ParseError);
    CHECK_THROWS_AS(parse_instance(std::string("p x3sat 3 1\n1 2 3\n")), ParseError);
    CHECK_THROWS_AS(parse_instance(std::string("p x3sat 3 1\n1 2 9 0\n")), ParseError);
    CHECK_THROWS_AS(parse_instance(std::string("p x3sat 3 1\n1 2 3 0 7\n")), ParseError);
    CHECK_THROWS_AS(parse_instance(std::string("p x3sat 3 1\n0\n")), ParseError);
    CHECK_THROWS_AS(parse_instance(std::string("p x3sat 3 1\n1 2 3 0\nw 1 2\nw 1 3\n")),
                    ParseError);
    CHECK_THROWS_AS(parse_instance(std::string("p cnf 3 1\n1 2 3 0\n")), ParseError);
    CHECK_THROWS_AS(parse_instance(std::string("")), ParseError);
  }
  SUBCASE("cnf header accepted in compatibility mode") {
    const auto doc = parse_instance(std::string("p cnf 3 1\n1 2 3 0\n"), true);
    CHECK(doc.num_vars == 3);
  }
}

TEST_CASE("serialize/parse round trip") {
  std::mt19937_64 rng(31415);
  for (int round = 0; round < 40; ++round) {
    InstanceDocument doc = generate_instance(
        3 + static_cast<int>(test::rand_below(rng, 12)),
        1 + static_cast<int>(test::rand_below(rng, 20)), rng(), (round & 1) != 0);
    if (round % 3 == 0) {
      // raw weights, including negatives; parsing shifts them
      std::map<int, long long> raw;
      for (int i = 0; i < 5; ++i) {
        const int var = 1 + static_cast<int>(test::rand_below(rng, doc.num_vars));
        const int lit = (test::rand_below(rng, 2) != 0) ? var : -var;
        raw[lit] = static_cast<long long>(test::rand_below(rng, 9)) - 3;
      }
      long long min_w = 0;
      for (auto& [lit, w] : raw) min_w = std::min(min_w, w);
      doc.weighted = true;
      doc.weight_shift = -min_w;
      for (auto& [lit, w] : raw) doc.weights[lit] = w + doc.weight_shift;
    }
    const InstanceDocument back = parse_instance(serialize_instance(doc));
    CHECK(back == doc);
  }
}

TEST_CASE("generate_instance") {
  SUBCASE("deterministic under a fixed seed") {
    CHECK(generate_instance(10, 6, 1, false) == generate_instance(10, 6, 1, false));
    CHECK_FALSE(generate_instance(10, 6, 1, false) == generate_instance(10, 6, 2, false));
  }
  SUBCASE("distinct flag forbids repeated variables") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto doc = generate_instance(3, 8, seed, true);
      for (const auto& cl : doc.clauses) {
        CHECK(cl.size() == 3);
        std::set<int> vars;
        for (int lit : cl) vars.insert(std::abs(lit));
        CHECK(vars.size() == 3);
      }
    }
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(generate_instance(2, 1, 1, false), InputError);
    CHECK_THROWS_AS(generate_instance(5, 0, 1, false), InputError);
  }
}

TEST_CASE("cli count") {
  const auto r = cli({"count"}, "p x3sat 3 1\n1 2 3 0\n");
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
}

TEST_CASE("cli count json") {
  const auto r = cli({"count", "--format", "json"}, "p x3sat 3 1\n1 2 3 0\n");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["mode"] == "count");
  CHECK(j["n"] == 3);
  CHECK(j["m"] == 1);
  CHECK(j["count"] == "3");
  CHECK(j["stats"]["leaves"].get<int>() >= 1);
}

TEST_CASE("cli weighted handles negative weights via the shift") {
  const std::string inst = "p x3sat 3 1\n1 2 3 0\nw 1 -2\n";
  const auto r = cli({"weighted"}, inst);
  CHECK(r.code == 0);
  CHECK(r.out == "-2 1\n0 2\ntotal 3\n");
  const auto j = nlohmann::json::parse(cli({"weighted", "-f", "json"}, inst).out);
  CHECK(j["weight_shift"] == 2);
  CHECK(j["total"] == "3");
}

TEST_CASE("cli maxweight") {
  const auto r = cli({"maxweight"}, "p x3sat 3 1\n1 2 3 0\nw 2 5\n");
  CHECK(r.code == 0);
  CHECK(r.out == "count 1\nweight 5\n");
  const auto unsat = cli({"maxweight"}, "p x3sat 1 1\n1 1 0\n");
  CHECK(unsat.out == "count 0\nweight 0\n");
}

TEST_CASE("cli tau") {
  const auto r = cli({"tau", "10", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 8) == "1.111982");
  const auto bounded = cli({"tau", "10", "4", "--bound", "1.1120"});
  CHECK(bounded.code == 0);
  CHECK(bounded.out.find("yes") != std::string::npos);
  const auto failing = cli({"tau", "10", "4", "--bound", "1.10"});
  CHECK(failing.code == 1);
  CHECK(failing.out.find("no") != std::string::npos);
}

TEST_CASE("cli gen is reproducible and feeds count") {
  const auto a = cli({"gen", "--n", "10", "--m", "6", "--seed", "42", "--distinct"});
  const auto b = cli({"gen", "--n", "10", "--m", "6", "--seed", "42", "--distinct"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto counted = cli({"count"}, a.out);
  CHECK(counted.code == 0);
  CHECK_FALSE(counted.out.empty());
}

TEST_CASE("cli verify small batch") {
  const auto r = cli({"verify", "--instances", "12", "--n-max", "10", "--verify-seed", "9"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all match") != std::string::npos);
}

TEST_CASE("cli stats subcommand reports the solve") {
  const auto r = cli({"stats"}, "p x3sat 3 1\n1 2 3 0\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("leaves") != std::string::npos);
  CHECK(r.out.find("rule firings") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(cli({"nonsense"}).code == 2);
  CHECK(cli({"count", "--bogus-flag"}).code == 2);
  CHECK(cli({"count"}, "p x3sat 3 1\n1 2 3 4 0\n").code == 1);
  CHECK(cli({"count", "--input", "/nonexistent/path"}).code == 1);
  CHECK(cli({"gen", "--n", "2", "--m", "1"}).code == 1);
}

TEST_CASE("cli output is byte-identical across runs") {
  const std::string inst = cli({"gen", "--n", "14", "--m", "12", "--seed", "5"}).out;
  for (const std::vector<std::string> cmd :
       {std::vector<std::string>{"count", "--stats"},
        std::vector<std::string>{"count", "-f", "json"},
        std::vector<std::string>{"weighted"},
        std::vector<std::string>{"maxweight"},
        std::vector<std::string>{"stats", "-f", "json"}}) {
    const auto first = cli(cmd, inst);
    const auto second = cli(cmd, inst);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
  }
}
