#include "dpfrac/graph.hpp"

#include <algorithm>
#include <queue>

#include "dpfrac/error.hpp"
#include "dpfrac/rng.hpp"

namespace dpfrac {

void Graph::rebuild_adjacency() {
  adj_.assign(n_, {});
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n <= 0) fail(Err::invalid_parameter, "graph needs at least one vertex");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(Err::invalid_parameter, "edge endpoint out of range");
    if (u == v) fail(Err::invalid_parameter, "loops are not allowed");
    g.edges_.push_back({std::min(u, v), std::max(u, v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end())
    fail(Err::invalid_parameter, "parallel edges are not allowed");
  g.rebuild_adjacency();
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) fail(Err::invalid_parameter, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  Graph g = from_edges(n, std::move(e));
  g.label_ = "cycle:" + std::to_string(n);
  return g;
}

Graph Graph::path(int n) {
  if (n < 1) fail(Err::invalid_parameter, "path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  Graph g = from_edges(n, std::move(e));
  g.label_ = "path:" + std::to_string(n);
  return g;
}

Graph Graph::complete_bipartite(int n, int m) {
  if (n < 1 || m < 1) fail(Err::invalid_parameter, "complete bipartite needs n, m >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) e.emplace_back(i, n + j);
  Graph g = from_edges(n + m, std::move(e));
  Parts p;
  for (int i = 0; i < n; ++i) p.a.push_back(i);
  for (int j = 0; j < m; ++j) p.b.push_back(n + j);
  g.parts_ = std::move(p);
  g.label_ = "kbip:" + std::to_string(n) + "," + std::to_string(m);
  return g;
}

Graph Graph::from_pruefer(const std::vector<int>& seq) {
  int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> deg(n, 1);
  for (int x : seq) {
    if (x < 0 || x >= n) fail(Err::invalid_parameter, "pruefer entry out of range");
    ++deg[x];
  }
  std::vector<std::pair<int, int>> e;
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push(v);
  for (int x : seq) {
    int leaf = leaves.top();
    leaves.pop();
    e.emplace_back(leaf, x);
    if (--deg[x] == 1) leaves.push(x);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  e.emplace_back(a, b);
  return from_edges(n, std::move(e));
}

Graph Graph::random_tree(int n, std::uint64_t seed) {
  if (n < 1) fail(Err::invalid_parameter, "tree needs n >= 1");
  if (n == 1) return from_edges(1, {});
  if (n == 2) return from_edges(2, {{0, 1}});
  SplitMix64 rng(seed);
  std::vector<int> seq(n - 2);
  for (int& x : seq) x = static_cast<int>(rng.below(n));
  return from_pruefer(seq);
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it != edges_.end() && *it == key) return static_cast<int>(it - edges_.begin());
  return -1;
}

int Graph::component_count() const {
  std::vector<int> seen(n_, 0);
  int comps = 0;
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj_[v])
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
  }
  return comps;
}

bool Graph::is_bipartite() const {
  std::vector<int> side(n_, -1);
  for (int s = 0; s < n_; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj_[v]) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

int Graph::degeneracy() const {
  std::vector<int> deg(n_);
  std::vector<char> gone(n_, 0);
  for (int v = 0; v < n_; ++v) deg[v] = degree(v);
  int best = 0;
  for (int round = 0; round < n_; ++round) {
    int pick = -1;
    for (int v = 0; v < n_; ++v)
      if (!gone[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
    best = std::max(best, deg[pick]);
    gone[pick] = 1;
    for (int w : adj_[pick])
      if (!gone[w]) --deg[w];
  }
  return best;
}

FracDpTwoClass classify_fractional_dp_two(const Graph& g) {
  if (!g.connected()) fail(Err::not_connected, "classification is defined for connected graphs");
  int rank = g.cycle_rank();
  if (rank == 0) return FracDpTwoClass::at_most_two_attained;
  // A connected bipartite graph with cycle rank 1 has exactly one cycle and
  // that cycle is even.
  if (g.is_bipartite() && rank == 1) return FracDpTwoClass::exactly_two_not_attained;
  return FracDpTwoClass::greater_than_two;
}

const char* frac_dp_two_name(FracDpTwoClass c) {
  switch (c) {
    case FracDpTwoClass::at_most_two_attained: return "at-most-two-attained";
    case FracDpTwoClass::exactly_two_not_attained: return "exactly-two-not-attained";
    case FracDpTwoClass::greater_than_two: return "greater-than-two";
  }
  return "?";
}

}  // namespace dpfrac
