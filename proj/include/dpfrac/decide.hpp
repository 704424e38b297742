#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpfrac/cover.hpp"
#include "dpfrac/numbers.hpp"
#include "dpfrac/solver.hpp"

namespace dpfrac {

struct DecideOptions {
  enum class Mode { exhaustive, sampled } mode = Mode::exhaustive;
  std::uint64_t samples = 10'000;        // sampled mode
  std::uint64_t seed = 1;
  bool include_partial = false;          // sampled mode: alternate partial draws
  std::uint64_t cover_budget = 100'000;  // exhaustive enumeration cap
  std::uint64_t node_budget = 10'000'000;  // per cover search
  int jobs = 1;
  double wall_seconds = 0;  // 0 = no wall clock limit
};

struct Verdict {
  enum class Outcome {
    colorable_exhaustive,    // every normalized cover was colored
    not_colorable,           // carries a refuting witness cover
    colorable_sampled_only,  // evidence, not proof
    unknown,                 // a budget ran out first
  } outcome = Outcome::unknown;
  int a = 0, b = 0;
  std::optional<Cover> witness;
  std::optional<std::uint64_t> witness_index;  // enumeration index or sample index
  std::optional<std::uint64_t> witness_seed;   // sampled mode
  bool reverified = false;  // witness confirmed by an independent search order
  std::uint64_t covers_examined = 0;
  std::uint64_t covers_colored = 0;
  std::uint64_t total_covers = 0;  // exhaustive space size when known
  std::uint64_t nodes = 0;
  std::uint64_t seed = 0;
  std::string note;
};

const char* outcome_name(Verdict::Outcome o);

// Decides (a,b)-DP-colorability. Exhaustive mode walks the normalized cover
// space; sampled mode draws seeded random covers and can only refute or
// report colorable-sampled-only. Witness refutations are re-verified with a
// second search order before being returned.
Verdict decide_ab_dp(const Graph& g, int a, int b, const DecideOptions& opt = {});

// Classical (a,b)-colorability by exact backtracking over b-subsets of [a].
bool is_ab_colorable(const Graph& g, int a, int b, std::uint64_t node_budget = 100'000'000);

// ---- Ledger of proven facts with a derived interval ----

struct Fact {
  enum class Kind { colorable, refuted, analytic_lower, analytic_upper } kind;
  std::string graph_key;
  int a = 0, b = 0;       // colorable / refuted
  Rational value;         // bound value, or a/b for decisions
  bool strict = false;    // lower bound is strict (value itself excluded)
  std::string provenance; // verdict or report identifier
};

struct Interval {
  Rational lo = 1;
  bool lo_strict = false;
  std::optional<Rational> hi;  // absent = unbounded above
  std::string to_string() const;
};

/// Accumulates proven facts per graph. Upper bounds come from colorable
/// pairs and analytic upper facts; the lower bound moves only on analytic
/// facts. A refuted pair excludes that single ratio witness but cannot move
/// the infimum, so it is recorded without affecting the interval.
class BoundsLedger {
 public:
  // Replaces any previous fact with the same key; raises integrity-failure
  // naming both provenances when the interval would become empty.
  void update(const Fact& f);

  Interval interval(const std::string& graph_key) const;
  std::vector<std::string> graph_keys() const;  // sorted
  const std::vector<Fact>& facts() const { return facts_; }

 private:
  std::vector<Fact> facts_;
  void check_consistency(const std::string& graph_key) const;
};

}  // namespace dpfrac
