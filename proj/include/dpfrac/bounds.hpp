#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpfrac/cover.hpp"
#include "dpfrac/numbers.hpp"
#include "dpfrac/solver.hpp"

namespace dpfrac {

// ---- Bad-tuple census (complete bipartite with a single B-side vertex) ----

// Closed form for the number of t-subset tuples on the A side that leave
// fewer than t usable colors at the B vertex: C((n+1)t-1, nt) * prod_{i=0}^{n-2}
// C((n-i)t, t). Exact upper bound for any cover, exact count for identity
// full covers.
BigInt bad_tuple_bound(int n, int t);

struct CensusResult {
  int n = 0, t = 0, fold = 0;
  BigInt formula_count;
  BigInt brute_count;
  BigInt total_tuples;  // C(fold, t)^n
};

// Streams all C(fold,t)^n tuples of a cover of K_{n,1} and counts the bad
// ones. `budget` caps the number of tuples visited.
BigInt count_bad_tuples_bruteforce(const Cover& c, int t, std::uint64_t budget = 100'000'000);

CensusResult census(int n, int t, std::uint64_t budget = 100'000'000);

// ---- Colorability threshold for K_{n,m} ----

struct ThresholdForms {
  Rational binomial_form;
  Rational factorial_form;
  Rational product_form;
};

ThresholdForms threshold_forms(int n, int t);

// Common value of the three forms; raises integrity-failure if they differ.
// K_{n,m} is ((n+1)t-1, t)-DP-colorable whenever m is strictly below this.
Rational colorability_threshold(int n, int t);

// Smallest t whose threshold exceeds m (the product diverges in t, so the
// scan terminates; the safety cutoff guards against regressions only).
int min_t_for(int n, int m, int safety_limit = 10'000);

// ---- Good-tuple search on an explicit cover ----

struct GoodTuple {
  std::vector<std::vector<int>> a_sets;  // chosen t-subset per A vertex
  SetColoring coloring;                  // A sets plus t survivors per B vertex
  std::uint64_t tuples_scanned = 0;
};

// First tuple (lexicographic) of t-subsets on the A side of a complete
// bipartite cover that leaves >= t usable colors at every B vertex, extended
// to a verified coloring. not-found when no tuple works.
std::optional<GoodTuple> find_good_tuple(const Cover& c, int t,
                                         std::uint64_t budget = 100'000'000);

// ---- Random-matching lower-bound machinery for K_{2,m} ----

// Probability that a fixed pair of t-subsets leaves >= t usable colors at
// one B vertex under independent uniform perfect matchings:
// sum_{i=0}^{a-2t} C(t,i) C(a-t,i) / C(a,t). Evaluates this and the
// tail-sum form and requires them to agree.
Rational exact_pej(int a, int t);

struct MonteCarloEstimate {
  double estimate = 0;
  double stderr_ = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

MonteCarloEstimate monte_carlo_pej(int a, int t, std::uint64_t trials, std::uint64_t seed);

// The bounding function whose value below 1 certifies 2+x as a lower bound
// for K_{2,m}. Defined on (0,1); evaluated at 50 decimal digits.
Float50 lower_bound_function(int m, const Rational& x);

struct ConditionEval {
  bool holds = false;
  std::string f_value;  // decimal, 50 digits
};

// Strict comparison with a guard band: |f-1| <= 1e-10 raises
// too-close-to-1 instead of certifying either way. Requires m >= 3 and
// 0 < d < 1/8.
ConditionEval lower_bound_condition(int m, const Rational& d);

struct MaxDResult {
  Rational d_max;       // largest certified-feasible grid point
  Rational bracket_hi;  // f >= 1 (or uncertified) at this point
  bool capped = false;  // supremum clipped at 1/8
  int iterations = 0;
};

// Bisection for the supremum of feasible d in (0, 1/8), within tol. The
// function is increasing there, so a single bracket suffices.
MaxDResult max_feasible_d(int m, const Rational& tol);

// ---- Randomized search for refuting covers of K_{2,m} ----

struct BadCoverSearch {
  enum class Outcome { witness, none_found, generated_unverifiable } outcome;
  std::optional<Cover> cover;       // witness or unverifiable candidate
  std::uint64_t trials_run = 0;
  std::uint64_t witness_seed = 0;   // per-trial derived seed of the returned cover
  std::uint64_t nodes = 0;
  std::string note;
};

// Draws seeded random full covers of K_{2,m}. When the C(a,t)^2 tuple space
// fits the budget each draw is decided exactly and a refuted cover is
// re-verified with an independent search order before being returned as a
// witness. When the tuple space exceeds the budget, no refutation is ever
// claimed: the first candidate is returned as generated-unverifiable.
BadCoverSearch search_bad_cover_k2m(int m, int a, int t, std::uint64_t trials,
                                    std::uint64_t seed,
                                    std::uint64_t tuple_budget = 1'000'000,
                                    std::uint64_t node_budget = 10'000'000);

}  // namespace dpfrac
