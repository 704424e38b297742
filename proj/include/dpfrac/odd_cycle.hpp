#pragma once

#include <cstdint>
#include <vector>

#include "dpfrac/cover.hpp"
#include "dpfrac/solver.hpp"

namespace dpfrac {

// Full record of one run of the odd-cycle construction. Every derived
// quantity is kept so a failed run can be reported verbatim.
struct OddCycleTrace {
  int r = 0;            // cycle has 2r+1 vertices, cover is (2r+1)-fold
  Cover completed;      // input after completion to perfect matchings
  // Cross-edge graph vertices are encoded fiber*fold + color. It is
  // 2-regular and decomposes into cycles, each winding the base cycle a
  // whole number of times; even cycles listed first.
  std::vector<std::vector<int>> cycles;  // vertex ids in forward walk order
  std::vector<int> windings;             // |cycle| = (2r+1) * winding
  int even_cycle_count = 0;              // l: cycles[0..l) are even
  std::vector<int> deleted;              // d_j: id removed from cycle j (fiber j)
  std::vector<std::vector<int>> paths;   // cycle j minus d_j, first vertex in fiber j+1
  std::vector<int> path_ks;              // |path j| = (2r+1)*k_j + 2r
  SetColoring coloring;                  // odd positions of every path; b = r
  std::vector<int> tallies;              // per-fiber selection counts
};

// Builds an (H,r)-coloring of a (2r+1)-fold cover of an odd cycle by
// completing the cover, decomposing its cross-edge graph into cycles,
// deleting one vertex per cycle, and selecting odd path positions. The
// result is verified before being returned; a verification or identity
// failure raises construction-integrity-error with the trace embedded in
// the message rather than repairing anything.
OddCycleTrace construct_odd_cycle_coloring(const Cover& c);

}  // namespace dpfrac
