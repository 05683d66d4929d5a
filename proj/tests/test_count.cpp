#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "xcount/counter.hpp"
#include "xcount/errors.hpp"
#include "xcount/oracle.hpp"

using namespace xcount;
using test::make_formula;
using test::ones;

TEST_CASE("count_models basics") {
  SUBCASE("empty formula counts one") {
    const auto r = count_models(Formula{});
    CHECK(r.value == 1);
    CHECK(r.stats.leaves == 1);
  }
  SUBCASE("single clause has three models") {
    CHECK(count_models(make_formula({{1, 2, 3}})).value == 3);
  }
  SUBCASE("two chained clauses have five models") {
    const Formula f = make_formula({{1, 2, 3}, {1, 4, 5}});
    const auto r = count_models(f);
    CHECK(r.value == 5);
    CHECK(r.value == brute_count(f, ones(f)));
  }
  SUBCASE("unsatisfiable input returns zero") {
    CHECK(count_models(make_formula({{1, 1, 1}})).value == 0);
  }
  SUBCASE("cardinality domain must match the formula") {
    const Formula f = make_formula({{1, 2, 3}});
    CardinalityVector<Natural> bad;
    bad.insert_var(1, 1, 1);
    CHECK_THROWS_AS(count_models(f, bad), ContractError);
  }
}

TEST_CASE("component handling") {
  SUBCASE("two isolated clauses multiply") {
    const auto r = count_models(make_formula({{1, 2, 3}, {4, 5, 6}}));
    CHECK(r.value == 9);
  }
  SUBCASE("two inert cycles split and multiply") {
    const Formula cycle = make_formula({{1, 2, 5}, {2, 3, 6}, {3, 4, 7}, {4, 1, 8}});
    const Natural one_cycle = brute_count(cycle, ones(cycle));
    const Formula both = make_formula({{1, 2, 5},
                                       {2, 3, 6},
                                       {3, 4, 7},
                                       {4, 1, 8},
                                       {11, 12, 15},
                                       {12, 13, 16},
                                       {13, 14, 17},
                                       {14, 11, 18}});
    const auto r = count_models(both);
    CHECK(r.value == one_cycle * one_cycle);
    CHECK(r.stats.component_splits == 1);
    CHECK(r.stats.rule_firings.at(7) == 1);
    CHECK(r.stats.rule_firings.at(18) == 2);
  }
}

TEST_CASE("a lone cycle needs exactly one branch") {
  const Formula cycle = make_formula({{1, 2, 5}, {2, 3, 6}, {3, 4, 7}, {4, 1, 8}});
  const auto r = count_models(cycle);
  CHECK(r.value == brute_count(cycle, ones(cycle)));
  CHECK(r.stats.branch_nodes == 1);
  CHECK(r.stats.leaves == 2);
  CHECK(r.stats.rule_firings.at(18) == 1);
}

TEST_CASE("line 15 instrumentation stays within thresholds") {
  const Formula f = make_formula({{1, 2, 3},
                                  {1, 4, 5},
                                  {1, 6, 7},
                                  {1, 8, 9},
                                  {2, 10, 4},
                                  {3, 11, 5},
                                  {6, 12, 8},
                                  {7, 13, 9}});
  const auto r = count_models(f);
  CHECK(r.value == brute_count(f, ones(f)));
  CHECK(r.stats.line15_branches >= 1);
  CHECK(r.stats.line15_threshold_violations == 0);
  CHECK(r.stats.line15_min_removed >= 5);
}

TEST_CASE("bisection sessions count correctly") {
  // two degree-3 clauses joined by a shared variable and two chains
  const Formula f = make_formula({{1, 2, 3}, {3, 4, 5}, {1, 6, 4}, {2, 7, 5}});
  const auto r = count_models(f);
  CHECK(r.value == brute_count(f, ones(f)));
  CHECK(r.stats.bisections >= 1);
  CHECK(r.stats.m3_history.size() == r.stats.bisections);
  CHECK(r.stats.cut_history.size() == r.stats.bisections);
  CHECK(r.stats.rule_firings.count(17));
}

TEST_CASE("self-loops are resolved inside the recursion") {
  const Formula f =
      make_formula({{1, 2, 3}, {2, 4, 5}, {5, 6, 3}, {1, 7, 8}, {8, 9, 10}, {10, 11, 7}});
  const auto r = count_models(f);
  CHECK(r.value == brute_count(f, ones(f)));
  CHECK(r.stats.self_loops_resolved >= 1);
}

TEST_CASE("random instances agree with the oracle") {
  std::mt19937_64 rng(2468);
  for (int round = 0; round < 150; ++round) {
    const int n = 3 + static_cast<int>(test::rand_below(rng, 12));
    const int m = 1 + static_cast<int>(test::rand_below(rng, 2 * n));
    const Formula f = test::random_formula(rng, n, m, (round % 2) == 0);
    auto c = test::random_card(f, rng);
    const auto r = Solver<Natural>().count(f, c);
    CHECK(r.value == brute_count(f, c));
    if (r.stats.component_splits == 0) CHECK(r.stats.leaves == r.stats.branch_nodes + 1);
  }
}

TEST_CASE("count_by_weight") {
  SUBCASE("distinct weights split the three models") {
    const Formula f = make_formula({{1, 2, 3}});
    WeightAssignment w;
    w.set(Lit(1, true), 1);
    w.set(Lit(2, true), 2);
    w.set(Lit(3, true), 3);
    const auto r = count_by_weight(f, w, 9);
    WeightPolynomial expected;
    expected += WeightPolynomial::monomial(1, 1);
    expected += WeightPolynomial::monomial(1, 2);
    expected += WeightPolynomial::monomial(1, 3);
    CHECK(r.value == expected);
  }
  SUBCASE("zero weights put all mass at degree zero") {
    const Formula f = make_formula({{1, 2, 3}, {1, 4, 5}});
    const auto r = count_by_weight(f, WeightAssignment{}, 25);
    CHECK(r.value == WeightPolynomial::monomial(5, 0));
  }
  SUBCASE("a single weighted literal stratifies the count") {
    const Formula f = make_formula({{1, 2, 3}, {1, 4, 5}});
    WeightAssignment w;
    w.set(Lit(1, true), 1);
    const auto r = count_by_weight(f, w, 25);
    CHECK(r.value.coeff(0) == 4);
    CHECK(r.value.coeff(1) == 1);
    CHECK(r.value.degree() == 1);
  }
  SUBCASE("weights above the bound are rejected") {
    const Formula f = make_formula({{1, 2, 3}});
    WeightAssignment w;
    w.set(Lit(2, false), 10);
    CHECK_THROWS_AS(count_by_weight(f, w, 9), InputError);
  }
}

TEST_CASE("count_max_weight") {
  SUBCASE("unique heaviest model") {
    const Formula f = make_formula({{1, 2, 3}});
    WeightAssignment w;
    w.set(Lit(1, true), 1);
    w.set(Lit(2, true), 2);
    w.set(Lit(3, true), 3);
    const auto r = count_max_weight(f, w);
    CHECK(r.value == MaxWeightPair(1, 3));
  }
  SUBCASE("unsatisfiable returns the zero pair") {
    const auto r = count_max_weight(make_formula({{1, 1, 1}}), WeightAssignment{});
    CHECK(r.value == MaxWeightPair());
    CHECK(r.value.count() == 0);
    CHECK(r.value.weight() == 0);
  }
  SUBCASE("all-zero weights tie every model") {
    const auto r = count_max_weight(make_formula({{1, 2, 3}}), WeightAssignment{});
    CHECK(r.value == MaxWeightPair(3, 0));
  }
  SUBCASE("negative weights are rejected") {
    WeightAssignment w;
    w.set(Lit(1, true), -2);
    CHECK_THROWS_AS(count_max_weight(make_formula({{1, 2, 3}}), w), InputError);
  }
}

TEST_CASE("max-weight branch combination rules") {
  // tie: 2*1 at weight 5+1 and 3*1 at weight 4+2 add up
  CHECK(combine_branch_max_weight(MaxWeightPair(2, 5), MaxWeightPair(1, 1),
                                  MaxWeightPair(3, 4), MaxWeightPair(1, 2)) ==
        MaxWeightPair(5, 6));
  // both sides dead
  CHECK(combine_branch_max_weight(MaxWeightPair(), MaxWeightPair(1, 1), MaxWeightPair(3, 4),
                                  MaxWeightPair()) == MaxWeightPair());
  // left side heavier
  CHECK(combine_branch_max_weight(MaxWeightPair(2, 5), MaxWeightPair(1, 2),
                                  MaxWeightPair(3, 4), MaxWeightPair(1, 2)) ==
        MaxWeightPair(2, 7));
  // one dead side passes the other through
  CHECK(combine_branch_max_weight(MaxWeightPair(), MaxWeightPair(1, 9), MaxWeightPair(4, 1),
                                  MaxWeightPair(1, 0)) == MaxWeightPair(4, 1));
  // multiplying with a zero-count literal normalizes to (0,0)
  CHECK(MaxWeightPair(5, 3) * MaxWeightPair() == MaxWeightPair());
}

TEST_CASE("weighted modes agree with the oracle on random instances") {
  std::mt19937_64 rng(1357);
  for (int round = 0; round < 60; ++round) {
    const int n = 3 + static_cast<int>(test::rand_below(rng, 9));
    const int m = 1 + static_cast<int>(test::rand_below(rng, 2 * n));
    const Formula f = test::random_formula(rng, n, m, (round % 2) == 0);
    WeightAssignment w;
    for (Var v : f.variables())
      for (bool pos : {true, false})
        w.set(Lit(v, pos), static_cast<long long>(test::rand_below(rng, 6)));

    const auto poly = count_by_weight(f, w, 5 * n);
    CHECK(poly.value == brute_count_by_weight(f, w));
    CHECK(poly.value.sum_of_coefficients() == count_models(f).value);

    const auto mw = count_max_weight(f, w);
    CHECK(mw.value == brute_max_weight(f, w));
  }
}

TEST_CASE("weighted modes run the bisection and self-loop paths too") {
  const Formula f = make_formula({{1, 2, 3}, {3, 4, 5}, {1, 6, 4}, {2, 7, 5}});
  const Formula loops =
      make_formula({{1, 2, 3}, {2, 4, 5}, {5, 6, 3}, {1, 7, 8}, {8, 9, 10}, {10, 11, 7}});
  std::mt19937_64 rng(8642);
  for (const Formula* g : {&f, &loops}) {
    WeightAssignment w;
    for (Var v : g->variables())
      for (bool pos : {true, false})
        w.set(Lit(v, pos), static_cast<long long>(test::rand_below(rng, 4)));
    CHECK(count_by_weight(*g, w, 100).value == brute_count_by_weight(*g, w));
    CHECK(count_max_weight(*g, w).value == brute_max_weight(*g, w));
  }
}

TEST_CASE("counting is independent of the bisection") {
  std::mt19937_64 rng(97531);
  for (int round = 0; round < 10; ++round) {
    const int n = 10 + static_cast<int>(test::rand_below(rng, 5));
    const Formula f = test::random_formula(rng, n, n, true);
    SolverOptions local;
    local.seed = rng();
    SolverOptions random_mode;
    random_mode.seed = rng();
    random_mode.bisection_mode = BisectionMode::random_partition;
    const auto a = count_models(f, local);
    const auto b = count_models(f, random_mode);
    CHECK(a.value == b.value);
  }
}

TEST_CASE("identical runs produce identical results and stats") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 10; ++round) {
    const Formula f = test::random_formula(rng, 12, 10, false);
    SolverOptions opts;
    opts.seed = 77;
    const auto a = count_models(f, opts);
    const auto b = count_models(f, opts);
    CHECK(a.value == b.value);
    CHECK(a.stats == b.stats);
  }
}
