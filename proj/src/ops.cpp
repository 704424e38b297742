#include "dpfrac/ops.hpp"

#include <algorithm>

#include "dpfrac/error.hpp"
#include "dpfrac/rng.hpp"

namespace dpfrac::ops {

namespace {

std::uint64_t opt_u64(const Json& j, const char* key, std::uint64_t dflt) {
  if (!j.is_object() || !j.contains(key)) return dflt;
  return j[key].get<std::uint64_t>();
}

}  // namespace

Json decide(const Graph& g, int a, int b, const Json& options) {
  DecideOptions o;
  std::string mode = "exhaustive";
  if (options.is_object() && options.contains("mode")) mode = options["mode"].get<std::string>();
  if (mode == "exhaustive") o.mode = DecideOptions::Mode::exhaustive;
  else if (mode == "sampled") o.mode = DecideOptions::Mode::sampled;
  else fail(Err::invalid_parameter, "mode must be 'exhaustive' or 'sampled'");
  o.samples = opt_u64(options, "samples", o.samples);
  o.seed = opt_u64(options, "seed", o.seed);
  o.cover_budget = opt_u64(options, "cover_budget", o.cover_budget);
  o.node_budget = opt_u64(options, "node_budget", o.node_budget);
  o.jobs = static_cast<int>(opt_u64(options, "jobs", 1));
  if (options.is_object() && options.contains("wall_seconds"))
    o.wall_seconds = options["wall_seconds"].get<double>();
  if (options.is_object() && options.contains("include_partial"))
    o.include_partial = options["include_partial"].get<bool>();

  Verdict v = decide_ab_dp(g, a, b, o);
  return verdict_to_json(v, g, mode);
}

Json construct_odd_on_cover(const Cover& c) { return trace_to_json(construct_odd_cycle_coloring(c)); }

Json construct_odd(int r, std::uint64_t seed) {
  if (r < 1) fail(Err::invalid_parameter, "need r >= 1");
  Graph g = Graph::cycle(2 * r + 1);
  Cover c = Cover::random_full(g, 2 * r + 1, seed);
  Json j = construct_odd_on_cover(c);
  j["seed"] = seed;
  return j;
}

Json enumerate_covers(const Graph& g, int fold, std::uint64_t budget, std::uint64_t emit_limit) {
  NormalizedCoverSpace space(g, fold, budget);
  Json j;
  j["type"] = "enumeration";
  j["graph"] = graph_to_json(g);
  j["fold"] = fold;
  j["count"] = space.count();
  Json tree = Json::array(), cotree = Json::array();
  for (const Edge& e : space.tree_edges()) tree.push_back({e.u, e.v});
  for (const Edge& e : space.cotree_edges()) cotree.push_back({e.u, e.v});
  j["tree_edges"] = std::move(tree);
  j["cotree_edges"] = std::move(cotree);
  if (emit_limit > 0) {
    Json covers = Json::array();
    std::uint64_t n = std::min(emit_limit, space.count());
    for (std::uint64_t i = 0; i < n; ++i) covers.push_back(cover_to_json(space.at(i)));
    j["covers"] = std::move(covers);
  }
  return j;
}

Json bounds_upper(int n, int m) {
  int t = min_t_for(n, m);
  Rational threshold = colorability_threshold(n, t);
  Rational value = Rational(n + 1) - Rational(1, t);
  std::string key = "kbip:" + std::to_string(n) + "," + std::to_string(m);
  Json j;
  j["type"] = "bound-report";
  j["bound"] = "upper";
  j["graph"] = key;
  j["n"] = n;
  j["m"] = m;
  j["t"] = t;
  j["threshold"] = rational_to_json(threshold);
  j["threshold_str"] = rational_to_string(threshold);
  j["value"] = rational_to_json(value);
  j["value_str"] = rational_to_string(value);
  j["statement"] = "chi*_DP(" + key + ") <= " + rational_to_string(value);
  j["provenance"] = "threshold-upper(n=" + std::to_string(n) + ",m=" + std::to_string(m) +
                    ",t=" + std::to_string(t) + ")";
  return j;
}

Json bounds_lower_at(int m, const Rational& d) {
  ConditionEval e = lower_bound_condition(m, d);
  std::string key = "kbip:2," + std::to_string(m);
  Json j;
  j["type"] = "bound-report";
  j["bound"] = "lower";
  j["method"] = "at-d";
  j["graph"] = key;
  j["m"] = m;
  j["d"] = rational_to_json(d);
  j["d_str"] = rational_to_string(d);
  j["f_value"] = e.f_value;
  j["condition_holds"] = e.holds;
  if (e.holds) {
    Rational value = Rational(2) + d;
    j["value"] = rational_to_json(value);
    j["value_str"] = rational_to_string(value);
    j["statement"] = rational_to_string(value) + " <= chi*_DP(" + key + ")";
    j["provenance"] = "matching-lower(m=" + std::to_string(m) + ",d=" + rational_to_string(d) + ")";
  }
  return j;
}

Json bounds_lower_bisect(int m, const Rational& tol) {
  MaxDResult r = max_feasible_d(m, tol);
  ConditionEval at_best = lower_bound_condition(m, r.d_max);
  std::string key = "kbip:2," + std::to_string(m);
  Rational value = Rational(2) + r.d_max;
  Json j;
  j["type"] = "bound-report";
  j["bound"] = "lower";
  j["method"] = "bisect";
  j["graph"] = key;
  j["m"] = m;
  j["tol"] = rational_to_json(tol);
  j["d_max"] = rational_to_json(r.d_max);
  j["d_max_str"] = rational_to_string(r.d_max);
  j["bracket_hi"] = rational_to_json(r.bracket_hi);
  j["capped"] = r.capped;
  j["iterations"] = r.iterations;
  j["f_value"] = at_best.f_value;
  j["condition_holds"] = true;
  j["value"] = rational_to_json(value);
  j["value_str"] = rational_to_string(value);
  j["statement"] = rational_to_string(value) + " <= chi*_DP(" + key + ")";
  j["provenance"] = "matching-lower-bisect(m=" + std::to_string(m) +
                    ",tol=" + rational_to_string(tol) + ")";
  return j;
}

Json bounds_census(int n, int t, std::uint64_t budget) {
  CensusResult r = census(n, t, budget);
  Json j;
  j["type"] = "census";
  j["n"] = n;
  j["t"] = t;
  j["fold"] = r.fold;
  j["formula_count"] = r.formula_count.str();
  j["brute_count"] = r.brute_count.str();
  j["total_tuples"] = r.total_tuples.str();
  j["match"] = r.formula_count == r.brute_count;
  return j;
}

Json bounds_badcover(int m, int a, int t, std::uint64_t trials, std::uint64_t seed,
                     std::uint64_t tuple_budget, std::uint64_t node_budget) {
  BadCoverSearch r = search_bad_cover_k2m(m, a, t, trials, seed, tuple_budget, node_budget);
  Json j;
  j["type"] = "badcover";
  j["m"] = m;
  j["a"] = a;
  j["t"] = t;
  j["seed"] = seed;
  j["trials_run"] = r.trials_run;
  j["nodes"] = r.nodes;
  switch (r.outcome) {
    case BadCoverSearch::Outcome::witness: j["outcome"] = "witness"; break;
    case BadCoverSearch::Outcome::none_found: j["outcome"] = "none-found"; break;
    case BadCoverSearch::Outcome::generated_unverifiable:
      j["outcome"] = "generated-unverifiable";
      break;
  }
  if (r.cover) j["cover"] = cover_to_json(*r.cover);
  if (r.outcome != BadCoverSearch::Outcome::none_found) j["cover_seed"] = r.witness_seed;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

namespace {

Json verify_result(bool valid, const std::string& type, const std::string& detail) {
  Json j;
  j["type"] = "verify-report";
  j["certificate_type"] = type;
  j["valid"] = valid;
  j["detail"] = detail;
  return j;
}

}  // namespace

Json verify(const Json& certificate, std::uint64_t node_budget) {
  const Json* payload = &certificate;
  if (certificate.is_object() && certificate.contains("payload"))
    payload = &certificate["payload"];
  if (!payload->is_object() || !payload->contains("type"))
    fail(Err::parse_error, "at $.type: certificate payload must declare its type");
  std::string type = (*payload)["type"].get<std::string>();

  if (type == "verdict") {
    std::string outcome = (*payload)["outcome"].get<std::string>();
    if (outcome != "not-colorable")
      fail(Err::invalid_parameter,
           "only refutation verdicts are re-checkable; got outcome '" + outcome + "'");
    if (!payload->contains("witness"))
      fail(Err::parse_error, "at $.witness: refutation verdict lacks its witness cover");
    Cover witness = cover_from_json((*payload)["witness"], "$.witness");
    int b = (*payload)["b"].get<int>();
    int a = (*payload)["a"].get<int>();
    if (witness.fold() != a) return verify_result(false, type, "witness fold differs from a");
    Graph claimed = graph_from_json((*payload)["graph"], "$.graph");
    if (!(claimed == witness.base()))
      return verify_result(false, type, "witness cover is not over the claimed graph");
    FindResult f1 = find_coloring(witness, b, node_budget, SearchOrder::mrv);
    FindResult f2 = find_coloring(witness, b, node_budget, SearchOrder::reverse_index);
    if (f1.outcome == FindResult::Outcome::found || f2.outcome == FindResult::Outcome::found)
      return verify_result(false, type, "witness cover admits a coloring; refutation is wrong");
    if (f1.outcome != FindResult::Outcome::none || f2.outcome != FindResult::Outcome::none)
      return verify_result(false, type, "could not exhaust the witness search within budget");
    Json r = verify_result(true, type, "witness refutation confirmed by two search orders");
    r["nodes"] = f1.nodes + f2.nodes;
    return r;
  }

  if (type == "coloring") {
    Cover c = cover_from_json((*payload)["cover"], "$.cover");
    SetColoring s =
        coloring_from_json((*payload)["coloring"], c.base().vertex_count(), "$.coloring");
    VerifyResult vr = verify_set_coloring(c, s);
    if (vr.ok()) return verify_result(true, type, "coloring verified");
    if (vr.kind == VerifyResult::Kind::violation) {
      Json r = verify_result(false, type,
                             "matched pair selected across edge (" + std::to_string(vr.u) + "," +
                                 std::to_string(vr.v) + "), colors (" + std::to_string(vr.cu + 1) +
                                 "," + std::to_string(vr.cv + 1) + ")");
      r["violation"] = {{"edge", {vr.u, vr.v}}, {"colors", {vr.cu + 1, vr.cv + 1}}};
      return r;
    }
    return verify_result(false, type,
                         "vertex " + std::to_string(vr.vertex) + " selects fewer than b colors");
  }

  if (type == "odd-cycle-trace") {
    Cover c = cover_from_json((*payload)["cover"], "$.cover");
    SetColoring claimed =
        coloring_from_json((*payload)["coloring"], c.base().vertex_count(), "$.coloring");
    if (!verify_set_coloring(c, claimed).ok())
      return verify_result(false, type, "embedded coloring fails verification");
    OddCycleTrace t = construct_odd_cycle_coloring(c);
    if (t.coloring.selection != claimed.selection)
      return verify_result(false, type,
                           "deterministic re-run selects a different set than the trace");
    return verify_result(true, type, "trace re-run and verification both agree");
  }

  fail(Err::invalid_parameter, "unknown certificate type '" + type + "'");
}

namespace {

std::vector<Fact> facts_from_artifact(const Json& artifact) {
  const Json* p = &artifact;
  if (artifact.is_object() && artifact.contains("payload")) p = &artifact["payload"];
  std::vector<Fact> facts;
  if (!p->is_object() || !p->contains("type")) return facts;
  std::string type = (*p)["type"].get<std::string>();
  if (type == "verdict") {
    std::string outcome = (*p)["outcome"].get<std::string>();
    int a = (*p)["a"].get<int>(), b = (*p)["b"].get<int>();
    if (b < 1) return facts;
    std::string key = (*p)["graph_key"].get<std::string>();
    std::string prov = "verdict(" + key + ",a=" + std::to_string(a) +
                       ",b=" + std::to_string(b) + ",mode=" + (*p)["mode"].get<std::string>() + ")";
    if (outcome == "colorable-exhaustive")
      facts.push_back({Fact::Kind::colorable, key, a, b, Rational(a, b), false, prov});
    else if (outcome == "not-colorable")
      facts.push_back({Fact::Kind::refuted, key, a, b, Rational(a, b), false, prov});
  } else if (type == "bound-report" && p->contains("value")) {
    std::string key = (*p)["graph"].get<std::string>();
    Fact f;
    f.graph_key = key;
    f.kind = (*p)["bound"].get<std::string>() == "upper" ? Fact::Kind::analytic_upper
                                                         : Fact::Kind::analytic_lower;
    f.value = rational_from_json((*p)["value"], "$.value");
    f.provenance = (*p)["provenance"].get<std::string>();
    facts.push_back(std::move(f));
  }
  return facts;
}

}  // namespace

Json ledger_add(const Json& ledger, const Json& artifact) {
  BoundsLedger l = ledger_from_json(ledger);
  for (const Fact& f : facts_from_artifact(artifact)) l.update(f);
  return ledger_to_json(l);
}

Json report(const Json& ledger, const std::string& graph_filter) {
  BoundsLedger l = ledger_from_json(ledger);
  Json rows = Json::array();
  for (const std::string& key : l.graph_keys()) {
    if (!graph_filter.empty() && key != graph_filter) continue;
    Interval iv = l.interval(key);
    Json row;
    row["graph"] = key;
    row["interval"] = iv.to_string();
    row["lo"] = rational_to_json(iv.lo);
    row["lo_strict"] = iv.lo_strict;
    if (iv.hi) row["hi"] = rational_to_json(*iv.hi);
    int nfacts = 0;
    for (const Fact& f : l.facts())
      if (f.graph_key == key) ++nfacts;
    row["facts"] = nfacts;
    rows.push_back(std::move(row));
  }
  Json j;
  j["type"] = "report";
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace dpfrac::ops
