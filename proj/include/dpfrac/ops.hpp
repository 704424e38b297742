#pragma once

#include <cstdint>
#include <string>

#include "dpfrac/json_io.hpp"

// Operation layer: every high-level entry point of the library as a
// JSON-in/JSON-out function. The C API and the acceptance suite drive these.

namespace dpfrac::ops {

Json decide(const Graph& g, int a, int b, const Json& options);
Json construct_odd(int r, std::uint64_t seed);
Json construct_odd_on_cover(const Cover& c);
Json enumerate_covers(const Graph& g, int fold, std::uint64_t budget, std::uint64_t emit_limit);
Json bounds_upper(int n, int m);
Json bounds_lower_at(int m, const Rational& d);
Json bounds_lower_bisect(int m, const Rational& tol);
Json bounds_census(int n, int t, std::uint64_t budget);
Json bounds_badcover(int m, int a, int t, std::uint64_t trials, std::uint64_t seed,
                     std::uint64_t tuple_budget, std::uint64_t node_budget);

// Re-checks an emitted artifact: a refutation verdict (independent search),
// a cover+coloring pair, or an odd-cycle trace (deterministic re-run).
// Accepts either a bare payload or a {"manifest":..., "payload":...} wrapper.
Json verify(const Json& certificate, std::uint64_t node_budget = 10'000'000);

// Folds the facts proved by an artifact into a ledger; returns the new one.
Json ledger_add(const Json& ledger, const Json& artifact);
// Interval table rows for every (or one filtered) graph key in the ledger.
Json report(const Json& ledger, const std::string& graph_filter);

}  // namespace dpfrac::ops
