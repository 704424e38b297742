#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dpfrac {

struct Edge {
  int u, v;  // canonical: u < v
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Partite sets recorded by the bipartite generator. Bound computations index
// the A side by position, so membership is stored, never re-derived.
struct Parts {
  std::vector<int> a;
  std::vector<int> b;
};

enum class FracDpTwoClass {
  at_most_two_attained,    // acyclic: value <= 2 and the bound is attained
  exactly_two_not_attained,  // bipartite with exactly one cycle
  greater_than_two,
};

/// Finite simple graph on vertices 0..n-1 with a canonical sorted edge list.
class Graph {
 public:
  Graph() = default;
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph complete_bipartite(int n, int m);
  static Graph random_tree(int n, std::uint64_t seed);  // Pruefer decode
  static Graph from_pruefer(const std::vector<int>& seq);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
  int edge_index(int u, int v) const;  // -1 when absent

  const std::optional<Parts>& parts() const { return parts_; }
  const std::optional<std::string>& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  int component_count() const;
  bool connected() const { return n_ > 0 && component_count() == 1; }
  bool is_bipartite() const;
  // |E| - |V| + components: dimension of the cycle space.
  int cycle_rank() const { return edge_count() - n_ + component_count(); }
  int degeneracy() const;

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.n_ == y.n_ && x.edges_ == y.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::optional<Parts> parts_;
  std::optional<std::string> label_;

  void rebuild_adjacency();
  friend Graph make_graph_with_parts(int, std::vector<std::pair<int, int>>, Parts, std::string);
};

// Structural classification of chi*_DP relative to 2 for a connected graph:
// no cycles -> at most 2 and attained; bipartite with cycle rank 1 -> the
// single cycle is even, value exactly 2 but never attained; otherwise > 2.
FracDpTwoClass classify_fractional_dp_two(const Graph& g);

const char* frac_dp_two_name(FracDpTwoClass c);

}  // namespace dpfrac
