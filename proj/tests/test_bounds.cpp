#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpfrac/bounds.hpp"
#include "dpfrac/error.hpp"
#include "dpfrac/rng.hpp"

using namespace dpfrac;

TEST_CASE("bad-tuple closed form") {
  CHECK(bad_tuple_bound(2, 2) == 30);
  CHECK(bad_tuple_bound(2, 1) == 2);
  CHECK(bad_tuple_bound(3, 1) == 6);
}

TEST_CASE("census: brute force matches the formula on identity covers") {
  for (auto [n, t] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1}}) {
    CensusResult r = census(n, t);
    CHECK(r.brute_count == r.formula_count);
  }
  CensusResult r21 = census(2, 1);
  CHECK(r21.brute_count == 2);
  CHECK(r21.total_tuples == 4);
}

TEST_CASE("census bad pairs for (2,1) are exactly the distinct singletons") {
  Cover c = Cover::identity(Graph::complete_bipartite(2, 1), 2);
  CHECK(count_bad_tuples_bruteforce(c, 1) == 2);
}

TEST_CASE("covers with deleted matching entries have at most the formula count") {
  SplitMix64 rng(17);
  for (auto [n, t] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1}}) {
    int fold = (n + 1) * t - 1;
    Graph g = Graph::complete_bipartite(n, 1);
    for (int trial = 0; trial < 20; ++trial) {
      Cover c = Cover::random_partial(g, fold, rng.next());
      CHECK(count_bad_tuples_bruteforce(c, t) <= bad_tuple_bound(n, t));
    }
    for (int trial = 0; trial < 20; ++trial) {
      // full covers relabel to the identity, so the count is exact
      Cover c = Cover::random_full(g, fold, rng.next());
      CHECK(count_bad_tuples_bruteforce(c, t) == bad_tuple_bound(n, t));
    }
  }
}

TEST_CASE("threshold values and the three algebraic forms") {
  CHECK(colorability_threshold(2, 2) == Rational(10, 3));
  CHECK(colorability_threshold(2, 1) == Rational(2));
  CHECK(colorability_threshold(2, 5) > 15);
  CHECK(colorability_threshold(2, 5) == Rational(143, 9));
  for (int n = 2; n <= 4; ++n)
    for (int t = 1; t <= 5; ++t) {
      ThresholdForms f = threshold_forms(n, t);
      CHECK(f.binomial_form == f.factorial_form);
      CHECK(f.factorial_form == f.product_form);
    }
}

TEST_CASE("smallest admissible t") {
  CHECK(min_t_for(2, 3) == 2);
  CHECK(min_t_for(2, 15) == 5);
  CHECK(min_t_for(2, 1) == 1);
  // the implied bounds: n+1-1/t
  CHECK(Rational(3) - Rational(1, min_t_for(2, 3)) == Rational(5, 2));
  CHECK(Rational(3) - Rational(1, min_t_for(2, 15)) == Rational(14, 5));
}

TEST_CASE("good tuples on covers of K_{2,3} at fold 5, t = 2") {
  Graph k23 = Graph::complete_bipartite(2, 3);
  auto got = find_good_tuple(Cover::identity(k23, 5), 2);
  REQUIRE(got.has_value());
  CHECK(got->coloring.b == 2);
  CHECK(verify_set_coloring(Cover::identity(k23, 5), got->coloring).ok());
  SplitMix64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    Cover c = Cover::random_full(k23, 5, rng.next());
    auto g = find_good_tuple(c, 2);
    REQUIRE(g.has_value());
    CHECK(verify_set_coloring(c, g->coloring).ok());
  }
}

TEST_CASE("good tuples may be absent when m reaches the threshold") {
  // m = 4 exceeds 10/3: not-found is a legal outcome; exhaustively check
  // that the scan outcome matches a direct colorability check per cover.
  Graph k24 = Graph::complete_bipartite(2, 4);
  SplitMix64 rng(77);
  int found = 0, not_found = 0;
  for (int trial = 0; trial < 30; ++trial) {
    Cover c = Cover::random_full(k24, 5, rng.next());
    auto g = find_good_tuple(c, 2);
    if (g) {
      ++found;
      CHECK(verify_set_coloring(c, g->coloring).ok());
    } else {
      ++not_found;
      CHECK(find_coloring(c, 2).outcome == FindResult::Outcome::none);
    }
  }
  CHECK(found + not_found == 30);
}

TEST_CASE("exact probability of a tuple staying good at one B vertex") {
  CHECK(exact_pej(5, 2) == Rational(7, 10));
  CHECK(exact_pej(3, 1) == Rational(1));
  CHECK(exact_pej(4, 2) == Rational(1, 6));
  // below fold 2t every tuple dies
  CHECK(exact_pej(3, 2) == Rational(0));
  for (int a = 2; a <= 12; ++a)
    for (int t = 1; 2 * t <= a + 2 && t <= a; ++t) {
      Rational p = exact_pej(a, t);
      CHECK(p >= 0);
      CHECK(p <= 1);
    }
}

TEST_CASE("Monte Carlo estimates agree with the exact probability") {
  auto run = [](int a, int t, double exact) {
    MonteCarloEstimate e = monte_carlo_pej(a, t, 100'000, 99);
    double tolerance = 4 * e.stderr_;
    CHECK(std::abs(e.estimate - exact) <= tolerance + 1e-12);
  };
  run(5, 2, 0.7);
  run(4, 2, 1.0 / 6);
  run(3, 1, 1.0);
  MonteCarloEstimate a = monte_carlo_pej(5, 2, 10'000, 7);
  MonteCarloEstimate b = monte_carlo_pej(5, 2, 10'000, 7);
  CHECK(a.estimate == b.estimate);
}

TEST_CASE("lower-bound condition at the published values") {
  ConditionEval m15 = lower_bound_condition(15, rational_from_string("0.0959"));
  CHECK(m15.holds);
  ConditionEval m3 = lower_bound_condition(3, rational_from_string("0.025"));
  CHECK(m3.holds);
  ConditionEval fail3 = lower_bound_condition(3, rational_from_string("0.1"));
  CHECK(!fail3.holds);
  CHECK_THROWS_AS(lower_bound_condition(3, rational_from_string("0.2")), Error);
  CHECK_THROWS_AS(lower_bound_condition(2, rational_from_string("0.05")), Error);
}

TEST_CASE("the bounding function is strictly increasing on the working range") {
  for (int m : {3, 5, 15, 50}) {
    Float50 prev = 0;
    for (int i = 1; i <= 100; ++i) {
      // grid over (0.001, 0.499)
      Rational x = Rational(1, 1000) + Rational(498 * i, 100'000);
      Float50 f = lower_bound_function(m, x);
      if (i > 1) CHECK(f > prev);
      prev = f;
    }
  }
}

TEST_CASE("largest certifiable d by bisection") {
  Rational tol(1, 1'000'000);
  MaxDResult m3 = max_feasible_d(3, tol);
  CHECK(m3.d_max >= rational_from_string("0.025"));
  CHECK(m3.d_max < rational_from_string("0.026"));
  CHECK(!m3.capped);
  CHECK(lower_bound_condition(3, m3.d_max).holds);

  MaxDResult m15 = max_feasible_d(15, tol);
  CHECK(m15.d_max >= rational_from_string("0.0959"));
  CHECK(m15.d_max < rational_from_string("0.096"));

  Rational prev = 0;
  for (int m = 3; m <= 30; ++m) {
    MaxDResult r = max_feasible_d(m, tol);
    CHECK(r.d_max >= prev);
    prev = r.d_max;
  }
}

TEST_CASE("bad-cover search at small parameters") {
  // K_{2,2} is C_4: the swap-holonomy cover appears fast and re-verifies
  BadCoverSearch r = search_bad_cover_k2m(2, 2, 1, 100, 7);
  REQUIRE(r.outcome == BadCoverSearch::Outcome::witness);
  REQUIRE(r.cover.has_value());
  CHECK(find_coloring(*r.cover, 1).outcome == FindResult::Outcome::none);
  // the seed regenerates the witness
  CHECK(Cover::random_full(Graph::complete_bipartite(2, 2), 2, r.witness_seed) == *r.cover);

  // every 5-fold cover of K_{2,3} is (H,2)-colorable: nothing to find
  BadCoverSearch none = search_bad_cover_k2m(3, 5, 2, 60, 11);
  CHECK(none.outcome == BadCoverSearch::Outcome::none_found);
  CHECK(none.trials_run == 60);
}

TEST_CASE("bad-cover search refuses to claim unverifiable refutations") {
  BadCoverSearch r = search_bad_cover_k2m(3, 81, 40, 100, 7);
  CHECK(r.outcome == BadCoverSearch::Outcome::generated_unverifiable);
  REQUIRE(r.cover.has_value());
  CHECK(r.cover->fold() == 81);
  CHECK(r.cover->full());
  CHECK(!r.note.empty());
}
