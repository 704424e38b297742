#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dpfrac/graph.hpp"

namespace dpfrac {

// One oriented cross map: color i of u goes to map[i] of v; -1 = unmatched.
struct EdgeMap {
  int u = 0, v = 0;
  std::vector<int> map;
};

struct SpanningTreeNormalization {
  std::vector<Edge> tree_edges;
  std::vector<Edge> cotree_edges;
  std::vector<std::vector<int>> relabeling;  // per-vertex permutation of [fold]
};

/// An a-fold cover of a graph: a partial injective color correspondence on
/// every edge, stored in both orientations for O(1) lookup. Each vertex v
/// implicitly carries the color set {(v,0),...,(v,fold-1)}; two selected
/// colors at one vertex always conflict, so only cross maps are stored.
class Cover {
 public:
  Cover() = default;

  // Validates: maps only on edges, in-range targets, injectivity, and that
  // opposite orientations of one edge are inverse to each other.
  static Cover build(Graph g, int fold, const std::vector<EdgeMap>& maps);
  static Cover identity(Graph g, int fold);
  static Cover random_full(Graph g, int fold, std::uint64_t seed);
  // Random permutation per edge, then each entry kept with probability 1/2.
  static Cover random_partial(Graph g, int fold, std::uint64_t seed);
  // k-fold cover encoding a list assignment: colors correspond when the
  // underlying list entries are the same color.
  static Cover from_list_assignment(Graph g, const std::vector<std::vector<int>>& lists);

  const Graph& base() const { return base_; }
  int fold() const { return fold_; }
  bool full() const { return full_; }

  std::span<const int> forward(int edge_idx) const { return fwd_[edge_idx]; }   // u -> v, u < v
  std::span<const int> backward(int edge_idx) const { return bwd_[edge_idx]; }  // v -> u

  // Image of `color` of vertex `from` at vertex `to`; -1 when unmatched.
  int image(int from, int to, int color) const;

  // Extends every partial map to a total bijection with the
  // lowest-unused-target rule. Deterministic; already-total maps unchanged.
  Cover completed() const;

  // Color-relabeling isomorphism making every tree-edge map the identity.
  // Requires a full cover and fold >= 2.
  std::pair<Cover, SpanningTreeNormalization> normalized(
      const std::vector<Edge>& tree_edges) const;

  std::vector<EdgeMap> edge_maps() const;  // canonical orientation u < v

  friend bool operator==(const Cover& x, const Cover& y) {
    return x.base_ == y.base_ && x.fold_ == y.fold_ && x.fwd_ == y.fwd_;
  }

 private:
  Graph base_;
  int fold_ = 0;
  std::vector<std::vector<int>> fwd_, bwd_;  // indexed by canonical edge index
  bool full_ = false;

  void recompute_full();
};

// BFS forest from vertex 0 (then lowest unvisited), neighbors in index
// order. This is the canonical tree used by enumeration and certificates.
std::vector<Edge> canonical_spanning_forest(const Graph& g);

/// Streams every full cover that has identity maps on the canonical spanning
/// forest and an arbitrary permutation on each remaining edge: (fold!)^rank
/// covers, indexed so the space can be partitioned across workers.
class NormalizedCoverSpace {
 public:
  NormalizedCoverSpace(Graph g, int fold, std::uint64_t budget);

  std::uint64_t count() const { return count_; }
  Cover at(std::uint64_t index) const;  // lexicographic permutation tuples
  const std::vector<Edge>& tree_edges() const { return tree_; }
  const std::vector<Edge>& cotree_edges() const { return cotree_; }

 private:
  Graph g_;
  int fold_;
  std::vector<Edge> tree_, cotree_;
  std::uint64_t perms_per_edge_ = 1;  // fold!
  std::uint64_t count_ = 1;
};

// Number of (H,1)-colorings by direct enumeration (fold^|V| candidates with
// pruning). Small instances only; used for normalization cross-checks.
std::uint64_t count_transversal_colorings(const Cover& c);

}  // namespace dpfrac
