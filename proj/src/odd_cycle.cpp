#include "dpfrac/odd_cycle.hpp"

#include <algorithm>
#include <string>

#include "dpfrac/error.hpp"

namespace dpfrac {

namespace {

std::string trace_summary(const OddCycleTrace& t, const std::string& what) {
  std::string s = what + " (r=" + std::to_string(t.r) + ", p=" + std::to_string(t.cycles.size()) +
                  ", l=" + std::to_string(t.even_cycle_count) + ", windings=";
  for (size_t i = 0; i < t.windings.size(); ++i)
    s += (i ? "," : "") + std::to_string(t.windings[i]);
  s += ", tallies=";
  for (size_t i = 0; i < t.tallies.size(); ++i)
    s += (i ? "," : "") + std::to_string(t.tallies[i]);
  return s + ")";
}

[[noreturn]] void integrity(const OddCycleTrace& t, const std::string& what) {
  fail(Err::construction_integrity, trace_summary(t, what));
}

}  // namespace

OddCycleTrace construct_odd_cycle_coloring(const Cover& input) {
  const Graph& g = input.base();
  int n = g.vertex_count();
  if (n < 3 || n % 2 == 0 || g.edge_count() != n)
    fail(Err::invalid_parameter, "base graph must be an odd cycle");
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2 || !g.has_edge(v, (v + 1) % n))
      fail(Err::invalid_parameter, "base graph must be the cycle 0-1-...-(n-1)-0");
  if (input.fold() != n)
    fail(Err::invalid_parameter, "fold must equal the number of vertices");

  OddCycleTrace t;
  t.r = (n - 1) / 2;
  t.completed = input.completed();
  const Cover& c = t.completed;
  const int fold = n;

  // Cross-edge graph: every color has exactly one image in the next fiber
  // and one preimage in the previous one, so each of its cycles walks the
  // base cycle forward and has length a multiple of n.
  auto succ = [&](int id) {
    int fiber = id / fold, color = id % fold;
    return ((fiber + 1) % n) * fold + c.image(fiber, (fiber + 1) % n, color);
  };

  std::vector<char> visited(n * fold, 0);
  std::vector<std::vector<int>> raw_cycles;
  for (int start = 0; start < n * fold; ++start) {
    if (visited[start]) continue;
    std::vector<int> cyc;
    int at = start;
    do {
      visited[at] = 1;
      cyc.push_back(at);
      at = succ(at);
    } while (at != start);
    raw_cycles.push_back(std::move(cyc));
  }
  std::stable_partition(raw_cycles.begin(), raw_cycles.end(),
                        [](const auto& cy) { return cy.size() % 2 == 0; });
  t.cycles = std::move(raw_cycles);

  int p = static_cast<int>(t.cycles.size());
  int odd_count = 0, total = 0;
  for (const auto& cy : t.cycles) {
    if (cy.size() % n != 0) integrity(t, "cycle length not a multiple of 2r+1");
    t.windings.push_back(static_cast<int>(cy.size()) / n);
    if (cy.size() % 2) ++odd_count;
    else ++t.even_cycle_count;
    total += static_cast<int>(cy.size());
  }
  if (total != n * fold || odd_count % 2 == 0 || p < 1 || p > n)
    integrity(t, "cycle decomposition shape is wrong");

  // Delete from cycle j the lowest color it uses in fiber j, then cut the
  // cycle open there. Walking forward from the deleted vertex's successor
  // puts the first path vertex in fiber j+1 (mod n).
  int sum_k = 0;
  for (int j = 0; j < p; ++j) {
    const auto& cy = t.cycles[j];
    int pos = -1;
    for (size_t i = 0; i < cy.size(); ++i) {
      if (cy[i] / fold != j) continue;
      if (pos < 0 || cy[i] % fold < cy[pos] % fold) pos = static_cast<int>(i);
    }
    if (pos < 0) integrity(t, "cycle misses a fiber");
    t.deleted.push_back(cy[pos]);
    std::vector<int> path;
    for (size_t s = 1; s < cy.size(); ++s) path.push_back(cy[(pos + s) % cy.size()]);
    if (!path.empty() && path.front() / fold != (j + 1) % n)
      integrity(t, "path does not start in the successor fiber");
    int len = static_cast<int>(path.size());
    int k = (len - (n - 1)) / n;
    if (len != n * k + n - 1) integrity(t, "path length is not (2r+1)k + 2r");
    bool even_cycle = j < t.even_cycle_count;
    if ((k % 2 == 1) != even_cycle) integrity(t, "winding parity mismatch");
    sum_k += k;
    t.path_ks.push_back(k);
    t.paths.push_back(std::move(path));
  }
  if (sum_k != n - p) integrity(t, "sum of path windings is not 2r+1-p");

  t.coloring.b = t.r;
  t.coloring.selection.assign(n, {});
  for (const auto& path : t.paths)
    for (size_t i = 0; i < path.size(); i += 2)  // positions 1,3,5,... 1-based
      t.coloring.selection[path[i] / fold].push_back(path[i] % fold);
  for (auto& sel : t.coloring.selection) std::sort(sel.begin(), sel.end());

  t.tallies.assign(n, 0);
  for (int v = 0; v < n; ++v) t.tallies[v] = static_cast<int>(t.coloring.selection[v].size());
  for (int v = 0; v < n; ++v)
    if (t.tallies[v] < t.r) integrity(t, "tally below r at fiber " + std::to_string(v));

  VerifyResult vr = verify_set_coloring(c, t.coloring);
  if (!vr.ok()) integrity(t, "selection failed verification");
  return t;
}

}  // namespace dpfrac
