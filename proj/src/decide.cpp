#include "dpfrac/decide.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "dpfrac/error.hpp"
#include "dpfrac/rng.hpp"

namespace dpfrac {

const char* outcome_name(Verdict::Outcome o) {
  switch (o) {
    case Verdict::Outcome::colorable_exhaustive: return "colorable-exhaustive";
    case Verdict::Outcome::not_colorable: return "not-colorable";
    case Verdict::Outcome::colorable_sampled_only: return "colorable-sampled-only";
    case Verdict::Outcome::unknown: return "unknown";
  }
  return "?";
}

namespace {

// Confirm a refutation with an independent variable order before emitting
// it. A second order that *colors* the cover exposes a search bug; one that
// merely runs out of budget leaves the refutation unconfirmed.
bool reverify_refutation(const Cover& c, int b, std::uint64_t node_budget, std::uint64_t& nodes) {
  FindResult check = find_coloring(c, b, node_budget, SearchOrder::reverse_index);
  nodes += check.nodes;
  if (check.outcome == FindResult::Outcome::found)
    fail(Err::integrity_failure, "refutation witness was colored by the second search order");
  return check.outcome == FindResult::Outcome::none;
}

// Shared scan over an indexed cover source. Every index below the lowest
// refutation is fully processed no matter how work is scheduled, so the
// statistics of a completed run are reproducible bit for bit.
struct Scan {
  std::uint64_t total;
  int jobs;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best_refuted{UINT64_MAX};
  std::vector<std::uint64_t> nodes;     // per index
  std::vector<char> status;             // 0 skipped, 1 colored, 2 refuted, 3 unknown
  std::mutex witness_mu;
  std::optional<Cover> witness;
  std::chrono::steady_clock::time_point deadline;
  bool use_deadline = false;
  std::atomic<bool> timed_out{false};
  std::mutex error_mu;
  std::exception_ptr first_error;

  explicit Scan(std::uint64_t total_, int jobs_, double wall_seconds)
      : total(total_), jobs(std::max(1, jobs_)), nodes(total_, 0), status(total_, 0) {
    if (wall_seconds > 0) {
      use_deadline = true;
      deadline = std::chrono::steady_clock::now() +
                 std::chrono::milliseconds(static_cast<long>(wall_seconds * 1000));
    }
  }

  template <typename MakeCover>
  void run(const MakeCover& make, int b, std::uint64_t node_budget) {
    auto worker = [&]() {
      try {
        for (;;) {
          std::uint64_t i = next.fetch_add(1);
          if (i >= total) return;
          if (i > best_refuted.load()) {
            continue;  // a lower refutation already decides; higher indices skip
          }
          if (use_deadline && std::chrono::steady_clock::now() > deadline) {
            timed_out.store(true);
            return;
          }
          Cover c = make(i);
          FindResult f = find_coloring(c, b, node_budget);
          nodes[i] = f.nodes;
          if (f.outcome == FindResult::Outcome::found) {
            status[i] = 1;
          } else if (f.outcome == FindResult::Outcome::none) {
            if (reverify_refutation(c, b, node_budget, nodes[i])) {
              status[i] = 2;
              std::uint64_t prev = best_refuted.load();
              while (i < prev && !best_refuted.compare_exchange_weak(prev, i)) {
              }
              std::lock_guard<std::mutex> lk(witness_mu);
              if (i == best_refuted.load()) witness = std::move(c);
            } else {
              // refuted by one order but unconfirmed within budget: this
              // cover must not count toward a colorable verdict
              status[i] = 3;
            }
          } else {
            status[i] = 3;
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lk(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
  }
};

}  // namespace

Verdict decide_ab_dp(const Graph& g, int a, int b, const DecideOptions& opt) {
  if (a < 1 || b < 0 || b > a) fail(Err::invalid_parameter, "need a >= b >= 0, a >= 1");
  if (a > 64 && g.edge_count() > 0) fail(Err::too_large, "decision search supports a <= 64");
  Verdict v;
  v.a = a;
  v.b = b;
  v.seed = opt.seed;

  if (b == 0) {
    v.outcome = Verdict::Outcome::colorable_exhaustive;
    v.note = "b = 0 is vacuous";
    return v;
  }
  if (a == 1) {
    // A 1-fold cover matches the single colors along each edge or not; the
    // adversary matches all of them, so an edge forbids (1,1).
    v.outcome = g.edge_count() == 0 ? Verdict::Outcome::colorable_exhaustive
                                    : Verdict::Outcome::not_colorable;
    if (g.edge_count() > 0) {
      v.witness = Cover::identity(g, 1);
      v.witness_index = 0;
      std::uint64_t nodes = 0;
      v.reverified = reverify_refutation(*v.witness, b, opt.node_budget, nodes);
      v.nodes = nodes;
      v.covers_examined = 1;
      v.total_covers = 1;
    }
    return v;
  }

  if (opt.mode == DecideOptions::Mode::exhaustive) {
    // Soundness of enumerating only normalized full covers:
    //   - any cover extends to a full cover, and a coloring of the extension
    //     is a coloring of the original (extra cross edges only ever forbid
    //     pairs), so "every full cover colorable" covers all covers;
    //   - relabeling colors vertex by vertex is an isomorphism of covers, and
    //     every full cover can be relabeled so that all spanning-tree maps
    //     are the identity; only the co-tree permutations remain free;
    //   - each enumerated cover is itself a legitimate cover, so a refutation
    //     found here is a refutation outright.
    std::optional<NormalizedCoverSpace> maybe_space;
    try {
      maybe_space.emplace(g, a, opt.cover_budget);
    } catch (const Error& e) {
      if (e.code() != Err::too_large) throw;
      v.outcome = Verdict::Outcome::unknown;
      v.note = "cover space exceeds the enumeration budget; nothing was decided";
      return v;
    }
    NormalizedCoverSpace& space = *maybe_space;
    v.total_covers = space.count();

    Scan scan(space.count(), opt.jobs, opt.wall_seconds);
    scan.run([&](std::uint64_t i) { return space.at(i); }, b, opt.node_budget);

    std::uint64_t refuted = scan.best_refuted.load();
    std::uint64_t limit = refuted == UINT64_MAX ? space.count() : refuted + 1;
    bool any_unknown = false;
    for (std::uint64_t i = 0; i < limit; ++i) {
      v.nodes += scan.nodes[i];
      if (scan.status[i] != 0) ++v.covers_examined;
      if (scan.status[i] == 1) ++v.covers_colored;
      if (scan.status[i] == 3) any_unknown = true;
    }
    if (refuted != UINT64_MAX) {
      v.outcome = Verdict::Outcome::not_colorable;
      v.witness = scan.witness;
      v.witness_index = refuted;
      v.reverified = true;
    } else if (scan.timed_out.load()) {
      v.outcome = Verdict::Outcome::unknown;
      v.note = "wall clock budget exhausted mid-enumeration";
    } else if (any_unknown) {
      v.outcome = Verdict::Outcome::unknown;
      v.note = "node budget exhausted on at least one cover";
    } else {
      v.outcome = Verdict::Outcome::colorable_exhaustive;
    }
    return v;
  }

  // Sampled mode.
  std::uint64_t count = opt.samples;
  Scan scan(count, opt.jobs, opt.wall_seconds);
  auto make = [&](std::uint64_t i) {
    std::uint64_t s = derive_seed(opt.seed, i);
    if (opt.include_partial && i % 2 == 1) return Cover::random_partial(g, a, s);
    return Cover::random_full(g, a, s);
  };
  scan.run(make, b, opt.node_budget);

  std::uint64_t refuted = scan.best_refuted.load();
  std::uint64_t limit = refuted == UINT64_MAX ? count : refuted + 1;
  bool any_unknown = false;
  for (std::uint64_t i = 0; i < limit; ++i) {
    v.nodes += scan.nodes[i];
    if (scan.status[i] != 0) ++v.covers_examined;
    if (scan.status[i] == 1) ++v.covers_colored;
    if (scan.status[i] == 3) any_unknown = true;
  }
  if (refuted != UINT64_MAX) {
    v.outcome = Verdict::Outcome::not_colorable;
    v.witness = scan.witness;
    v.witness_index = refuted;
    v.witness_seed = derive_seed(opt.seed, refuted);
    v.reverified = true;
  } else if (scan.timed_out.load()) {
    v.outcome = Verdict::Outcome::unknown;
    v.note = "wall clock budget exhausted mid-sampling";
  } else if (any_unknown) {
    v.outcome = Verdict::Outcome::unknown;
    v.note = "node budget exhausted on at least one sampled cover";
  } else {
    v.outcome = Verdict::Outcome::colorable_sampled_only;
    v.note = "sampled evidence only; no exhaustive claim";
  }
  return v;
}

bool is_ab_colorable(const Graph& g, int a, int b, std::uint64_t node_budget) {
  if (a < 1 || b < 1 || b > a) fail(Err::invalid_parameter, "need a >= b >= 1");
  if (a > 64) fail(Err::too_large, "classical check supports a <= 64");
  int n = g.vertex_count();
  {
    BigInt space = 1;
    BigInt per = binomial(a, b);
    for (int i = 0; i < n; ++i) space *= per;
    if (space > BigInt(1) << 62) fail(Err::too_large, "assignment space too large");
  }
  using Mask = std::uint64_t;
  std::vector<Mask> subsets;
  {
    Mask m = (Mask{1} << b) - 1;
    for (;;) {
      subsets.push_back(m);
      Mask c = m & -m, r = m + c;
      if (r <= m) break;
      m = (((r ^ m) >> 2) / c) | r;
      if (a < 64 && m >= (Mask{1} << a)) break;
    }
  }
  std::vector<Mask> pick(n, 0);
  std::uint64_t nodes = 0;
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (Mask s : subsets) {
      if (++nodes > node_budget) fail(Err::too_large, "node budget exhausted");
      bool ok = true;
      for (int w : g.neighbors(v)) {
        if (w < v && (pick[w] & s)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      pick[v] = s;
      if (self(self, v + 1)) return true;
      pick[v] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

// ---- BoundsLedger ----

std::string Interval::to_string() const {
  std::string s = lo_strict ? "(" : "[";
  s += rational_to_string(lo);
  s += ", ";
  s += hi ? rational_to_string(*hi) + "]" : "inf)";
  return s;
}

namespace {

std::string fact_key(const Fact& f) {
  return f.graph_key + "|" + std::to_string(static_cast<int>(f.kind)) + "|" +
         std::to_string(f.a) + "|" + std::to_string(f.b) + "|" + rational_to_string(f.value);
}

}  // namespace

void BoundsLedger::update(const Fact& f) {
  if (f.provenance.empty()) fail(Err::invalid_parameter, "fact needs a provenance record");
  std::string key = fact_key(f);
  auto it = std::find_if(facts_.begin(), facts_.end(),
                         [&](const Fact& g) { return fact_key(g) == key; });
  if (it != facts_.end()) *it = f;
  else facts_.push_back(f);
  check_consistency(f.graph_key);
}

Interval BoundsLedger::interval(const std::string& graph_key) const {
  Interval iv;
  for (const Fact& f : facts_) {
    if (f.graph_key != graph_key) continue;
    switch (f.kind) {
      case Fact::Kind::colorable:
      case Fact::Kind::analytic_upper:
        if (!iv.hi || f.value < *iv.hi) iv.hi = f.value;
        break;
      case Fact::Kind::analytic_lower:
        if (f.value > iv.lo || (f.value == iv.lo && f.strict && !iv.lo_strict)) {
          iv.lo = f.value;
          iv.lo_strict = f.strict;
        }
        break;
      case Fact::Kind::refuted:
        break;  // excludes one pair; cannot move the infimum
    }
  }
  return iv;
}

void BoundsLedger::check_consistency(const std::string& graph_key) const {
  Interval iv = interval(graph_key);
  if (!iv.hi) return;
  bool empty = *iv.hi < iv.lo || (*iv.hi == iv.lo && iv.lo_strict);
  if (!empty) return;
  std::string lo_src = "?", hi_src = "?";
  for (const Fact& f : facts_) {
    if (f.graph_key != graph_key) continue;
    if (f.kind == Fact::Kind::analytic_lower && f.value == iv.lo) lo_src = f.provenance;
    if ((f.kind == Fact::Kind::colorable || f.kind == Fact::Kind::analytic_upper) &&
        f.value == *iv.hi)
      hi_src = f.provenance;
  }
  fail(Err::integrity_failure, "empty interval for " + graph_key + ": lower bound " +
                                   rational_to_string(iv.lo) + " from " + lo_src +
                                   " exceeds upper bound " + rational_to_string(*iv.hi) +
                                   " from " + hi_src);
}

std::vector<std::string> BoundsLedger::graph_keys() const {
  std::vector<std::string> keys;
  for (const Fact& f : facts_) keys.push_back(f.graph_key);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

}  // namespace dpfrac
