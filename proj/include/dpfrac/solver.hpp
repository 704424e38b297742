#pragma once

#include <cstdint>
#include <vector>

#include "dpfrac/cover.hpp"

namespace dpfrac {

/// Candidate (H,b)-coloring: a set of color indices per vertex. Search
/// produces exactly b per vertex; verification accepts >= b.
struct SetColoring {
  int b = 0;
  std::vector<std::vector<int>> selection;  // sorted color indices per vertex

  // Keeps the lowest b colors at every vertex. Dropping colors cannot
  // introduce a cross-edge conflict.
  SetColoring trimmed() const;
};

struct VerifyResult {
  enum class Kind { ok, violation, deficient, } kind = Kind::ok;
  // violation: selected colors cu at u and cv at v matched across edge (u,v)
  int u = -1, v = -1, cu = -1, cv = -1;
  int vertex = -1;  // deficient
  bool ok() const { return kind == Kind::ok; }
};

// Checks quasi-independence (no selected pair matched across any edge) and
// per-vertex quota. Witnesses are reported in canonical edge order, then
// lowest color pair; deficiencies in vertex order.
VerifyResult verify_set_coloring(const Cover& c, const SetColoring& s);

enum class SearchOrder {
  mrv,            // fewest feasible b-subsets first, ties by index
  reverse_index,  // static order n-1..0; used for independent re-checks
};

struct FindResult {
  enum class Outcome { found, none, unknown } outcome = Outcome::unknown;
  SetColoring coloring;     // valid when found
  std::uint64_t nodes = 0;  // assignments attempted
};

// Exact backtracking search for a selection of exactly b colors per vertex
// with no matched pair selected. `none` is only reported after exhausting
// the space; hitting the node budget yields `unknown`.
FindResult find_coloring(const Cover& c, int b, std::uint64_t node_budget = 10'000'000,
                         SearchOrder order = SearchOrder::mrv);

}  // namespace dpfrac
