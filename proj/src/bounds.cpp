#include "dpfrac/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "dpfrac/error.hpp"
#include "dpfrac/rng.hpp"

namespace dpfrac {

namespace {

void require_bipartite_parts(const Cover& c, int expect_b = -1) {
  if (!c.base().parts())
    fail(Err::invalid_parameter, "cover base must be a generated complete bipartite graph");
  if (expect_b > 0 && static_cast<int>(c.base().parts()->b.size()) != expect_b)
    fail(Err::invalid_parameter, "unexpected B-side size");
}

using Mask = std::uint64_t;

// All t-subsets of [fold] as bitmasks, in lexicographic order of the sorted
// color lists ({0,1} < {0,2} < ... < {0,fold-1} < {1,2} < ...).
std::vector<Mask> subsets_lex(int fold, int t) {
  std::vector<Mask> out;
  std::vector<int> idx(t);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Mask m = 0;
    for (int i : idx) m |= Mask{1} << i;
    out.push_back(m);
    int i = t - 1;
    while (i >= 0 && idx[i] == fold - t + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

BigInt bad_tuple_bound(int n, int t) {
  if (n < 2 || t < 1) fail(Err::invalid_parameter, "need n >= 2 and t >= 1");
  long long fold = static_cast<long long>(n + 1) * t - 1;
  BigInt r = binomial(fold, static_cast<long long>(n) * t);
  for (int i = 0; i + 2 <= n; ++i)
    r *= binomial(static_cast<long long>(n - i) * t, t);
  return r;
}

BigInt count_bad_tuples_bruteforce(const Cover& c, int t, std::uint64_t budget) {
  require_bipartite_parts(c, 1);
  const auto& parts = *c.base().parts();
  int n = static_cast<int>(parts.a.size());
  int u = parts.b[0];
  int fold = c.fold();
  if (fold > 64) fail(Err::too_large, "census supports fold <= 64");
  if (t < 1 || t > fold) fail(Err::invalid_parameter, "need 1 <= t <= fold");

  BigInt total = binomial(fold, t);
  BigInt space = 1;
  for (int i = 0; i < n; ++i) space *= total;
  if (space > budget) fail(Err::too_large, "tuple space exceeds budget");

  // Image mask at u of every t-subset of each A vertex, precomputed.
  std::vector<Mask> subs = subsets_lex(fold, t);
  std::vector<std::vector<Mask>> images(n);
  for (int i = 0; i < n; ++i) {
    int v = parts.a[i];
    images[i].reserve(subs.size());
    for (Mask sub : subs) {
      Mask img = 0;
      for (Mask m = sub; m; m &= m - 1) {
        int x = c.image(v, u, std::countr_zero(m));
        if (x >= 0) img |= Mask{1} << x;
      }
      images[i].push_back(img);
    }
  }

  BigInt bad = 0;
  std::vector<size_t> pos(n, 0);
  while (true) {
    Mask removed = 0;
    for (int i = 0; i < n; ++i) removed |= images[i][pos[i]];
    if (fold - std::popcount(removed) < t) ++bad;
    int i = n - 1;
    while (i >= 0 && pos[i] + 1 == images[i].size()) pos[i--] = 0;
    if (i < 0) break;
    ++pos[i];
  }
  return bad;
}

CensusResult census(int n, int t, std::uint64_t budget) {
  CensusResult r;
  r.n = n;
  r.t = t;
  r.fold = (n + 1) * t - 1;
  r.formula_count = bad_tuple_bound(n, t);
  Cover c = Cover::identity(Graph::complete_bipartite(n, 1), r.fold);
  r.brute_count = count_bad_tuples_bruteforce(c, t, budget);
  BigInt per = binomial(r.fold, t);
  r.total_tuples = 1;
  for (int i = 0; i < n; ++i) r.total_tuples *= per;
  return r;
}

ThresholdForms threshold_forms(int n, int t) {
  if (n < 2 || t < 1) fail(Err::invalid_parameter, "need n >= 2 and t >= 1");
  long long a = static_cast<long long>(n + 1) * t - 1;

  BigInt num = 1;
  BigInt c_at = binomial(a, t);
  for (int i = 0; i < n; ++i) num *= c_at;
  ThresholdForms f;
  f.binomial_form = Rational(num, bad_tuple_bound(n, t));

  Rational fact = n;
  for (int i = 0; i + 2 <= n; ++i) {
    long long ni = static_cast<long long>(n - i) * t;
    fact *= Rational(factorial(static_cast<long long>(n) * t - 1 + t) * factorial(ni - t),
                     factorial(static_cast<long long>(n) * t - 1) * factorial(ni));
  }
  f.factorial_form = fact;

  Rational prod = n;
  for (int i = 0; i + 2 <= n; ++i)
    for (int j = 0; j < t; ++j)
      prod *= Rational(static_cast<long long>(n) * t + j, static_cast<long long>(n - i) * t - j);
  f.product_form = prod;
  return f;
}

Rational colorability_threshold(int n, int t) {
  ThresholdForms f = threshold_forms(n, t);
  if (f.binomial_form != f.factorial_form || f.factorial_form != f.product_form)
    fail(Err::integrity_failure, "threshold forms disagree for n=" + std::to_string(n) +
                                     " t=" + std::to_string(t));
  return f.product_form;
}

int min_t_for(int n, int m, int safety_limit) {
  if (n < 2 || m < 1) fail(Err::invalid_parameter, "need n >= 2 and m >= 1");
  for (int t = 1; t <= safety_limit; ++t)
    if (Rational(m) < colorability_threshold(n, t)) return t;
  fail(Err::integrity_failure, "threshold scan hit the safety limit");
}

std::optional<GoodTuple> find_good_tuple(const Cover& c, int t, std::uint64_t budget) {
  require_bipartite_parts(c);
  const auto& parts = *c.base().parts();
  int n = static_cast<int>(parts.a.size());
  int m = static_cast<int>(parts.b.size());
  int fold = c.fold();
  if (fold > 64) fail(Err::too_large, "good-tuple scan supports fold <= 64");
  if (t < 1 || t > fold) fail(Err::invalid_parameter, "need 1 <= t <= fold");

  // images[i][j] = per-subset removal mask of A vertex i at B vertex j.
  BigInt per = binomial(fold, t);
  BigInt space = 1;
  for (int i = 0; i < n; ++i) space *= per;
  if (space > budget) fail(Err::too_large, "tuple space exceeds budget");

  std::vector<Mask> subs = subsets_lex(fold, t);
  std::vector<std::vector<std::vector<Mask>>> images(n);
  for (int i = 0; i < n; ++i) {
    images[i].assign(m, {});
    for (int j = 0; j < m; ++j) {
      images[i][j].reserve(subs.size());
      for (Mask sub : subs) {
        Mask img = 0;
        for (Mask x = sub; x; x &= x - 1) {
          int y = c.image(parts.a[i], parts.b[j], std::countr_zero(x));
          if (y >= 0) img |= Mask{1} << y;
        }
        images[i][j].push_back(img);
      }
    }
  }

  GoodTuple out;
  std::vector<size_t> pos(n, 0);
  while (true) {
    ++out.tuples_scanned;
    bool good = true;
    for (int j = 0; j < m && good; ++j) {
      Mask removed = 0;
      for (int i = 0; i < n; ++i) removed |= images[i][j][pos[i]];
      if (fold - std::popcount(removed) < t) good = false;
    }
    if (good) {
      out.coloring.b = t;
      out.coloring.selection.assign(c.base().vertex_count(), {});
      for (int i = 0; i < n; ++i) {
        std::vector<int> s;
        for (Mask x = subs[pos[i]]; x; x &= x - 1) s.push_back(std::countr_zero(x));
        out.a_sets.push_back(s);
        out.coloring.selection[parts.a[i]] = s;
      }
      for (int j = 0; j < m; ++j) {
        Mask removed = 0;
        for (int i = 0; i < n; ++i) removed |= images[i][j][pos[i]];
        std::vector<int>& s = out.coloring.selection[parts.b[j]];
        for (int color = 0; color < fold && static_cast<int>(s.size()) < t; ++color)
          if (!(removed >> color & 1)) s.push_back(color);
      }
      if (!verify_set_coloring(c, out.coloring).ok())
        fail(Err::integrity_failure, "good tuple produced an invalid coloring");
      return out;
    }
    int i = n - 1;
    while (i >= 0 && pos[i] + 1 == subs.size()) pos[i--] = 0;
    if (i < 0) break;
    ++pos[i];
  }
  return std::nullopt;
}

Rational exact_pej(int a, int t) {
  if (t < 1 || a < t) fail(Err::invalid_parameter, "need 1 <= t <= a");
  BigInt reindexed = 0;
  for (int i = 0; i <= a - 2 * t; ++i) reindexed += binomial(t, i) * binomial(a - t, i);
  BigInt tail = 0;
  for (int i = std::max(0, 3 * t - a); i <= t; ++i)
    tail += binomial(t, i) * binomial(a - t, t - i);
  if (reindexed != tail) fail(Err::integrity_failure, "probability forms disagree");
  Rational p(tail, binomial(a, t));
  if (p < 0 || p > 1) fail(Err::integrity_failure, "probability outside [0,1]");
  return p;
}

MonteCarloEstimate monte_carlo_pej(int a, int t, std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) fail(Err::invalid_parameter, "need trials >= 1");
  if (t < 1 || a < t || a > 64) fail(Err::invalid_parameter, "need 1 <= t <= a <= 64");
  SplitMix64 rng(seed);
  // A_1, A_2 fixed as the first t colors of each of the two A vertices; the
  // two matchings into the single B vertex are drawn uniformly.
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    std::vector<int> m1 = rng.permutation(a);
    std::vector<int> m2 = rng.permutation(a);
    Mask removed = 0;
    for (int x = 0; x < t; ++x) removed |= (Mask{1} << m1[x]) | (Mask{1} << m2[x]);
    if (a - std::popcount(removed) >= t) ++hits;
  }
  MonteCarloEstimate e;
  e.trials = trials;
  e.seed = seed;
  e.estimate = static_cast<double>(hits) / static_cast<double>(trials);
  e.stderr_ = std::sqrt(e.estimate * (1 - e.estimate) / static_cast<double>(trials));
  return e;
}

Float50 lower_bound_function(int m, const Rational& x) {
  if (m < 3) fail(Err::invalid_parameter, "need m >= 3");
  if (x <= 0 || x >= 1) fail(Err::invalid_parameter, "function is defined on (0,1)");
  using boost::multiprecision::exp;
  using boost::multiprecision::log;
  Float50 d = to_float50(x);
  Float50 lf = (Float50(2) / m - 1) * log(d + 2) + (d + 1) * log(d + 1) +
               (d - 1) * log(1 - d) - 2 * d * log(d);
  return exp(lf);
}

ConditionEval lower_bound_condition(int m, const Rational& d) {
  if (d <= 0 || d >= Rational(1, 8))
    fail(Err::invalid_parameter, "d must lie strictly between 0 and 0.125");
  Float50 f = lower_bound_function(m, d);
  Float50 gap = f - 1;
  if (gap < 0) gap = -gap;
  // Never certify a strict inequality out of round-off.
  if (gap <= Float50("1e-10"))
    fail(Err::too_close_to_one, "f(d) is within the guard band of 1; refine d");
  ConditionEval e;
  e.holds = f < 1;
  e.f_value = f.str(50);
  return e;
}

MaxDResult max_feasible_d(int m, const Rational& tol) {
  if (tol <= 0) fail(Err::invalid_parameter, "tol must be positive");
  auto feasible = [&](const Rational& d) {
    try {
      return lower_bound_condition(m, d).holds;
    } catch (const Error& e) {
      if (e.code() == Err::too_close_to_one) return false;  // do not certify
      throw;
    }
  };
  MaxDResult r;
  // The function exceeds 1 at 1/8 for every m; still, respect the stated
  // domain and clip there if feasibility ever reaches the endpoint.
  Rational lo = 0, hi = Rational(1, 8);
  bool have_lo = false;
  for (Rational probe(1, 1024); probe > tol / 4 || !have_lo; probe /= 2) {
    if (feasible(probe)) {
      lo = probe;
      have_lo = true;
      break;
    }
    if (probe < Rational(1, BigInt(1) << 60))
      fail(Err::no_bound, "no feasible d found near 0 for m=" + std::to_string(m));
  }
  if (feasible(hi - tol / 2)) {
    r.d_max = hi;
    r.bracket_hi = hi;
    r.capped = true;
    return r;
  }
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    ++r.iterations;
    if (feasible(mid)) lo = mid;
    else hi = mid;
  }
  r.d_max = lo;
  r.bracket_hi = hi;
  return r;
}

BadCoverSearch search_bad_cover_k2m(int m, int a, int t, std::uint64_t trials,
                                    std::uint64_t seed, std::uint64_t tuple_budget,
                                    std::uint64_t node_budget) {
  if (m < 1 || a < 1 || t < 1 || t > a) fail(Err::invalid_parameter, "bad (m, a, t)");
  Graph g = Graph::complete_bipartite(2, m);
  BigInt tuple_space = binomial(a, t) * binomial(a, t);

  BadCoverSearch out;
  if (tuple_space > tuple_budget || a > 64) {
    // Refusal path: generate one candidate per the random process but make
    // no claim about it.
    out.outcome = BadCoverSearch::Outcome::generated_unverifiable;
    out.witness_seed = derive_seed(seed, 0);
    out.cover = Cover::random_full(g, a, out.witness_seed);
    out.trials_run = 1;
    out.note = "tuple space C(a,t)^2 = " + tuple_space.str() +
               " exceeds budget " + std::to_string(tuple_budget) +
               "; refusing to claim an unverified refutation";
    return out;
  }

  for (std::uint64_t i = 0; i < trials; ++i) {
    std::uint64_t s = derive_seed(seed, i);
    Cover c = Cover::random_full(g, a, s);
    FindResult f = find_coloring(c, t, node_budget);
    out.nodes += f.nodes;
    ++out.trials_run;
    if (f.outcome == FindResult::Outcome::none) {
      FindResult check = find_coloring(c, t, node_budget, SearchOrder::reverse_index);
      out.nodes += check.nodes;
      if (check.outcome == FindResult::Outcome::found)
        fail(Err::integrity_failure, "refutation did not re-verify under a second order");
      if (check.outcome == FindResult::Outcome::unknown) {
        out.note = "a refutation could not be re-verified within the node budget";
        continue;
      }
      out.outcome = BadCoverSearch::Outcome::witness;
      out.cover = std::move(c);
      out.witness_seed = s;
      return out;
    }
    if (f.outcome == FindResult::Outcome::unknown) {
      out.note = "a search hit the node budget; that trial is inconclusive";
    }
  }
  out.outcome = BadCoverSearch::Outcome::none_found;
  return out;
}

}  // namespace dpfrac
