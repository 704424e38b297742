#include "dpfrac/dpfrac.h"

#include <cstring>
#include <string>

#include "dpfrac/error.hpp"
#include "dpfrac/ops.hpp"
#include "dpfrac/version.hpp"

using namespace dpfrac;

struct dpfrac_graph {
  Graph g;
};
struct dpfrac_cover {
  Cover c;
};

namespace {

thread_local std::string g_last_error;

int code_of(const Error& e) {
  switch (e.code()) {
    case Err::parse_error: return DPFRAC_EPARSE;
    case Err::too_large: return DPFRAC_EBUDGET;
    case Err::integrity_failure:
    case Err::construction_integrity: return DPFRAC_EINTERNAL;
    default: return DPFRAC_EINVAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
int guarded(F&& f) {
  try {
    f();
    return DPFRAC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return code_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DPFRAC_EINTERNAL;
  }
}

int require(bool cond, const char* msg) {
  if (cond) return DPFRAC_OK;
  g_last_error = msg;
  return DPFRAC_EINVAL;
}

Json parse_json_arg(const char* s, const char* what) {
  if (!s) return Json::object();
  Json j = Json::parse(s, nullptr, false);
  if (j.is_discarded()) fail(Err::parse_error, std::string("malformed JSON in ") + what);
  return j;
}

}  // namespace

extern "C" {

const char* dpfrac_version(void) { return kVersion; }
const char* dpfrac_rng_algorithm(void) { return kRngAlgorithm; }
const char* dpfrac_last_error(void) { return g_last_error.c_str(); }
void dpfrac_string_free(char* s) { delete[] s; }

int dpfrac_graph_create(const char* spec, dpfrac_graph** out) {
  if (int rc = require(spec && out, "spec and out must be non-null")) return rc;
  return guarded([&] { *out = new dpfrac_graph{parse_graph_spec(spec)}; });
}

int dpfrac_graph_to_json(const dpfrac_graph* g, char** json) {
  if (int rc = require(g && json, "graph and out must be non-null")) return rc;
  return guarded([&] { *json = dup_string(graph_to_json(g->g).dump()); });
}

int dpfrac_graph_key(const dpfrac_graph* g, char** key) {
  if (int rc = require(g && key, "graph and out must be non-null")) return rc;
  return guarded([&] { *key = dup_string(graph_key(g->g)); });
}

int dpfrac_graph_classify(const dpfrac_graph* g, char** name) {
  if (int rc = require(g && name, "graph and out must be non-null")) return rc;
  return guarded([&] { *name = dup_string(frac_dp_two_name(classify_fractional_dp_two(g->g))); });
}

int dpfrac_graph_degeneracy(const dpfrac_graph* g, int* out) {
  if (int rc = require(g && out, "graph and out must be non-null")) return rc;
  return guarded([&] { *out = g->g.degeneracy(); });
}

void dpfrac_graph_destroy(dpfrac_graph* g) { delete g; }

int dpfrac_cover_from_json(const char* json, dpfrac_cover** out) {
  if (int rc = require(json && out, "json and out must be non-null")) return rc;
  return guarded([&] { *out = new dpfrac_cover{cover_from_json(parse_json_arg(json, "cover"))}; });
}

int dpfrac_cover_random(const dpfrac_graph* g, int fold, uint64_t seed, dpfrac_cover** out) {
  if (int rc = require(g && out, "graph and out must be non-null")) return rc;
  return guarded([&] { *out = new dpfrac_cover{Cover::random_full(g->g, fold, seed)}; });
}

int dpfrac_cover_to_json(const dpfrac_cover* c, char** json) {
  if (int rc = require(c && json, "cover and out must be non-null")) return rc;
  return guarded([&] { *json = dup_string(cover_to_json(c->c).dump()); });
}

void dpfrac_cover_destroy(dpfrac_cover* c) { delete c; }

int dpfrac_decide(const dpfrac_graph* g, int a, int b, const char* options_json,
                  char** verdict_json) {
  if (int rc = require(g && verdict_json, "graph and out must be non-null")) return rc;
  return guarded([&] {
    Json options = parse_json_arg(options_json, "options");
    *verdict_json = dup_string(ops::decide(g->g, a, b, options).dump());
  });
}

int dpfrac_is_ab_colorable(const dpfrac_graph* g, int a, int b, uint64_t node_budget,
                           int* result) {
  if (int rc = require(g && result, "graph and out must be non-null")) return rc;
  return guarded([&] { *result = is_ab_colorable(g->g, a, b, node_budget) ? 1 : 0; });
}

int dpfrac_construct_odd(int r, uint64_t seed, char** trace_json) {
  if (int rc = require(trace_json != nullptr, "out must be non-null")) return rc;
  return guarded([&] { *trace_json = dup_string(ops::construct_odd(r, seed).dump()); });
}

int dpfrac_construct_odd_on_cover(const dpfrac_cover* c, char** trace_json) {
  if (int rc = require(c && trace_json, "cover and out must be non-null")) return rc;
  return guarded([&] { *trace_json = dup_string(ops::construct_odd_on_cover(c->c).dump()); });
}

int dpfrac_enumerate_covers(const dpfrac_graph* g, int fold, uint64_t budget,
                            uint64_t emit_limit, char** json) {
  if (int rc = require(g && json, "graph and out must be non-null")) return rc;
  return guarded(
      [&] { *json = dup_string(ops::enumerate_covers(g->g, fold, budget, emit_limit).dump()); });
}

int dpfrac_bounds_upper(int n, int m, char** json) {
  if (int rc = require(json != nullptr, "out must be non-null")) return rc;
  return guarded([&] { *json = dup_string(ops::bounds_upper(n, m).dump()); });
}

int dpfrac_bounds_lower_at(int m, const char* d, char** json) {
  if (int rc = require(d && json, "d and out must be non-null")) return rc;
  return guarded(
      [&] { *json = dup_string(ops::bounds_lower_at(m, rational_from_string(d)).dump()); });
}

int dpfrac_bounds_lower_bisect(int m, const char* tol, char** json) {
  if (int rc = require(tol && json, "tol and out must be non-null")) return rc;
  return guarded(
      [&] { *json = dup_string(ops::bounds_lower_bisect(m, rational_from_string(tol)).dump()); });
}

int dpfrac_bounds_census(int n, int t, char** json) {
  if (int rc = require(json != nullptr, "out must be non-null")) return rc;
  return guarded([&] { *json = dup_string(ops::bounds_census(n, t, 100'000'000).dump()); });
}

int dpfrac_bounds_badcover(int m, int a, int t, uint64_t trials, uint64_t seed,
                           uint64_t tuple_budget, uint64_t node_budget, char** json) {
  if (int rc = require(json != nullptr, "out must be non-null")) return rc;
  return guarded([&] {
    *json = dup_string(
        ops::bounds_badcover(m, a, t, trials, seed, tuple_budget, node_budget).dump());
  });
}

int dpfrac_verify(const char* certificate_json, uint64_t node_budget, char** report_json) {
  if (int rc = require(certificate_json && report_json, "certificate and out must be non-null"))
    return rc;
  return guarded([&] {
    Json cert = parse_json_arg(certificate_json, "certificate");
    *report_json = dup_string(ops::verify(cert, node_budget).dump());
  });
}

int dpfrac_ledger_add(const char* ledger_json, const char* artifact_json,
                      char** new_ledger_json) {
  if (int rc = require(artifact_json && new_ledger_json, "artifact and out must be non-null"))
    return rc;
  return guarded([&] {
    Json ledger = parse_json_arg(ledger_json, "ledger");
    Json artifact = parse_json_arg(artifact_json, "artifact");
    *new_ledger_json = dup_string(ops::ledger_add(ledger, artifact).dump());
  });
}

int dpfrac_report(const char* ledger_json, const char* graph_filter, char** report_json) {
  if (int rc = require(report_json != nullptr, "out must be non-null")) return rc;
  return guarded([&] {
    Json ledger = parse_json_arg(ledger_json, "ledger");
    std::string filter = graph_filter ? graph_filter : "";
    *report_json = dup_string(ops::report(ledger, filter).dump());
  });
}

}  // extern "C"
