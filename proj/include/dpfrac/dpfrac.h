/* C API of the dpfrac shared library.
 *
 * Conventions:
 *   - Functions return DPFRAC_OK (0) on success; on any other code the
 *     output parameters are untouched and dpfrac_last_error() describes the
 *     failure (thread local).
 *   - Strings returned through char** are heap-allocated JSON or plain text;
 *     release them with dpfrac_string_free().
 *   - Handles are opaque; destroy them with the matching *_destroy().
 *   - Domain outcomes (colorable / refuted / unknown, bounds, reports) live
 *     inside the returned JSON, not in the status code.
 */

#ifndef DPFRAC_H
#define DPFRAC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dpfrac_graph dpfrac_graph;
typedef struct dpfrac_cover dpfrac_cover;

enum {
  DPFRAC_OK = 0,
  DPFRAC_EINVAL = 1,   /* invalid argument or domain precondition */
  DPFRAC_EPARSE = 2,   /* malformed JSON or spec string */
  DPFRAC_EBUDGET = 3,  /* an enumeration or search budget was exceeded */
  DPFRAC_EINTERNAL = 4 /* internal integrity failure */
};

const char* dpfrac_version(void);
const char* dpfrac_rng_algorithm(void);
const char* dpfrac_last_error(void);
void dpfrac_string_free(char* s);

/* Graphs: spec is "cycle:<n>", "path:<n>", "kbip:<n>,<m>" or inline JSON
 * {"n":..., "edges":[[u,v],...], "parts":{"A":[...],"B":[...]}?}. */
int dpfrac_graph_create(const char* spec, dpfrac_graph** out);
int dpfrac_graph_to_json(const dpfrac_graph* g, char** json);
int dpfrac_graph_key(const dpfrac_graph* g, char** key);
/* "at-most-two-attained" | "exactly-two-not-attained" | "greater-than-two";
 * fails with DPFRAC_EINVAL on disconnected input. */
int dpfrac_graph_classify(const dpfrac_graph* g, char** name);
int dpfrac_graph_degeneracy(const dpfrac_graph* g, int* out);
void dpfrac_graph_destroy(dpfrac_graph* g);

int dpfrac_cover_from_json(const char* json, dpfrac_cover** out);
int dpfrac_cover_random(const dpfrac_graph* g, int fold, uint64_t seed, dpfrac_cover** out);
int dpfrac_cover_to_json(const dpfrac_cover* c, char** json);
void dpfrac_cover_destroy(dpfrac_cover* c);

/* options_json (may be NULL or "{}"): {"mode":"exhaustive"|"sampled",
 * "samples":n, "seed":n, "include_partial":bool, "cover_budget":n,
 * "node_budget":n, "jobs":n, "wall_seconds":x}. */
int dpfrac_decide(const dpfrac_graph* g, int a, int b, const char* options_json,
                  char** verdict_json);
int dpfrac_is_ab_colorable(const dpfrac_graph* g, int a, int b, uint64_t node_budget,
                           int* result);

int dpfrac_construct_odd(int r, uint64_t seed, char** trace_json);
int dpfrac_construct_odd_on_cover(const dpfrac_cover* c, char** trace_json);

int dpfrac_enumerate_covers(const dpfrac_graph* g, int fold, uint64_t budget,
                            uint64_t emit_limit, char** json);

int dpfrac_bounds_upper(int n, int m, char** json);
/* d / tol are decimal or fraction literals, e.g. "0.025" or "1/40". */
int dpfrac_bounds_lower_at(int m, const char* d, char** json);
int dpfrac_bounds_lower_bisect(int m, const char* tol, char** json);
int dpfrac_bounds_census(int n, int t, char** json);
int dpfrac_bounds_badcover(int m, int a, int t, uint64_t trials, uint64_t seed,
                           uint64_t tuple_budget, uint64_t node_budget, char** json);

/* certificate: refutation verdict, {"type":"coloring",...} pair, or
 * odd-cycle trace; bare payload or {"manifest":...,"payload":...}. */
int dpfrac_verify(const char* certificate_json, uint64_t node_budget, char** report_json);

int dpfrac_ledger_add(const char* ledger_json, const char* artifact_json,
                      char** new_ledger_json);
/* graph_filter may be NULL for all rows. */
int dpfrac_report(const char* ledger_json, const char* graph_filter, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* DPFRAC_H */
