#include "dpfrac/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "dpfrac/error.hpp"
#include "dpfrac/numbers.hpp"
#include "dpfrac/rng.hpp"

namespace dpfrac {

namespace {

std::vector<int> invert_partial(const std::vector<int>& m, int fold) {
  std::vector<int> inv(fold, -1);
  for (int i = 0; i < fold; ++i)
    if (m[i] >= 0) inv[m[i]] = i;
  return inv;
}

void check_map(const std::vector<int>& m, int fold, const std::string& where) {
  if (static_cast<int>(m.size()) != fold)
    fail(Err::invalid_parameter, "map on " + where + " must have length fold");
  std::vector<char> hit(fold, 0);
  for (int t : m) {
    if (t == -1) continue;
    if (t < 0 || t >= fold) fail(Err::invalid_color, "target color out of range on " + where);
    if (hit[t]) fail(Err::violates_condition_4, "map on " + where + " is not injective");
    hit[t] = 1;
  }
}

}  // namespace

void Cover::recompute_full() {
  full_ = true;
  for (const auto& m : fwd_)
    for (int t : m)
      if (t < 0) {
        full_ = false;
        return;
      }
}

Cover Cover::build(Graph g, int fold, const std::vector<EdgeMap>& maps) {
  if (fold < 1) fail(Err::invalid_parameter, "fold must be >= 1");
  Cover c;
  c.base_ = std::move(g);
  c.fold_ = fold;
  int ne = c.base_.edge_count();
  c.fwd_.assign(ne, std::vector<int>(fold, -1));
  std::vector<char> given(ne, 0);
  for (const auto& em : maps) {
    std::string where = "(" + std::to_string(em.u) + "," + std::to_string(em.v) + ")";
    int idx = c.base_.edge_index(em.u, em.v);
    if (idx < 0) fail(Err::violates_condition_3, "map placed on non-edge " + where);
    if (given[idx]) fail(Err::invalid_parameter, "duplicate map for edge " + where);
    given[idx] = 1;
    check_map(em.map, fold, where);
    // Store in canonical orientation.
    c.fwd_[idx] = em.u < em.v ? em.map : invert_partial(em.map, fold);
  }
  c.bwd_.resize(ne);
  for (int e = 0; e < ne; ++e) c.bwd_[e] = invert_partial(c.fwd_[e], fold);
  c.recompute_full();
  return c;
}

Cover Cover::identity(Graph g, int fold) {
  std::vector<EdgeMap> maps;
  std::vector<int> id(fold);
  std::iota(id.begin(), id.end(), 0);
  for (const Edge& e : g.edges()) maps.push_back({e.u, e.v, id});
  return build(std::move(g), fold, maps);
}

Cover Cover::random_full(Graph g, int fold, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<EdgeMap> maps;
  for (const Edge& e : g.edges()) maps.push_back({e.u, e.v, rng.permutation(fold)});
  return build(std::move(g), fold, maps);
}

Cover Cover::random_partial(Graph g, int fold, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<EdgeMap> maps;
  for (const Edge& e : g.edges()) {
    std::vector<int> m = rng.permutation(fold);
    for (int& t : m)
      if (rng.next() & 1) t = -1;
    maps.push_back({e.u, e.v, std::move(m)});
  }
  return build(std::move(g), fold, maps);
}

Cover Cover::from_list_assignment(Graph g, const std::vector<std::vector<int>>& lists) {
  if (static_cast<int>(lists.size()) != g.vertex_count())
    fail(Err::invalid_assignment, "need one list per vertex");
  if (lists.empty()) fail(Err::invalid_assignment, "empty assignment");
  size_t k = lists[0].size();
  for (const auto& l : lists) {
    if (l.size() != k) fail(Err::invalid_assignment, "lists must all have the same size");
    std::vector<int> s = l;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      fail(Err::invalid_assignment, "list entries must be distinct");
  }
  std::vector<EdgeMap> maps;
  for (const Edge& e : g.edges()) {
    std::vector<int> m(k, -1);
    for (size_t i = 0; i < k; ++i) {
      auto it = std::find(lists[e.v].begin(), lists[e.v].end(), lists[e.u][i]);
      if (it != lists[e.v].end()) m[i] = static_cast<int>(it - lists[e.v].begin());
    }
    maps.push_back({e.u, e.v, std::move(m)});
  }
  return build(std::move(g), static_cast<int>(k), maps);
}

int Cover::image(int from, int to, int color) const {
  int idx = base_.edge_index(from, to);
  if (idx < 0) return -1;
  return from < to ? fwd_[idx][color] : bwd_[idx][color];
}

Cover Cover::completed() const {
  Cover c = *this;
  for (int e = 0; e < base_.edge_count(); ++e) {
    auto& m = c.fwd_[e];
    std::vector<char> used(fold_, 0);
    for (int t : m)
      if (t >= 0) used[t] = 1;
    int next = 0;
    for (int i = 0; i < fold_; ++i) {
      if (m[i] >= 0) continue;
      while (used[next]) ++next;
      m[i] = next;
      used[next] = 1;
    }
    c.bwd_[e] = invert_partial(m, fold_);
  }
  c.full_ = true;
  return c;
}

std::pair<Cover, SpanningTreeNormalization> Cover::normalized(
    const std::vector<Edge>& tree_edges) const {
  if (fold_ < 2) fail(Err::normalization_precondition, "normalization requires fold >= 2");
  if (!full_) fail(Err::invalid_parameter, "normalization requires a full cover");
  int n = base_.vertex_count();
  if (static_cast<int>(tree_edges.size()) != n - base_.component_count())
    fail(Err::invalid_tree, "edge set is not a spanning forest");
  std::vector<std::vector<std::pair<int, int>>> tree_adj(n);  // (neighbor, edge idx)
  for (const Edge& e : tree_edges) {
    int idx = base_.edge_index(e.u, e.v);
    if (idx < 0) fail(Err::invalid_tree, "tree edge is not an edge of the base graph");
    tree_adj[e.u].emplace_back(e.v, idx);
    tree_adj[e.v].emplace_back(e.u, idx);
  }
  // Acyclicity: n - components edges and no cycle <=> forest; detect a cycle
  // during the relabeling BFS instead of a separate pass.
  std::vector<int> id(fold_);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> sigma(n);  // new color = sigma[v][old color]
  std::vector<char> seen(n, 0);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    sigma[root] = id;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int p = q.front();
      q.pop();
      for (auto [child, eidx] : tree_adj[p]) {
        if (seen[child]) continue;
        seen[child] = 1;
        // The tree map sends old color x of p to M(x) at child. After
        // relabeling, color sigma[p][x] must map to itself, so
        // sigma[child][M(x)] = sigma[p][x].
        const auto& m = p < child ? fwd_[eidx] : bwd_[eidx];
        sigma[child].assign(fold_, -1);
        for (int x = 0; x < fold_; ++x) sigma[child][m[x]] = sigma[p][x];
        q.push(child);
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (sigma[v].empty()) fail(Err::invalid_tree, "tree does not span its component");

  Cover out = *this;
  for (int e = 0; e < base_.edge_count(); ++e) {
    const Edge& ed = base_.edges()[e];
    std::vector<int> m(fold_, -1);
    // new map: sigma[v] o old o sigma[u]^{-1}
    for (int x = 0; x < fold_; ++x) m[sigma[ed.u][x]] = sigma[ed.v][fwd_[e][x]];
    out.fwd_[e] = std::move(m);
    out.bwd_[e] = invert_partial(out.fwd_[e], fold_);
  }
  SpanningTreeNormalization info;
  info.tree_edges = tree_edges;
  std::sort(info.tree_edges.begin(), info.tree_edges.end());
  for (const Edge& e : base_.edges())
    if (!std::binary_search(info.tree_edges.begin(), info.tree_edges.end(), e))
      info.cotree_edges.push_back(e);
  info.relabeling = std::move(sigma);
  return {std::move(out), std::move(info)};
}

std::vector<EdgeMap> Cover::edge_maps() const {
  std::vector<EdgeMap> out;
  for (int e = 0; e < base_.edge_count(); ++e)
    out.push_back({base_.edges()[e].u, base_.edges()[e].v, fwd_[e]});
  return out;
}

std::vector<Edge> canonical_spanning_forest(const Graph& g) {
  int n = g.vertex_count();
  std::vector<Edge> tree;
  std::vector<char> seen(n, 0);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (seen[w]) continue;
        seen[w] = 1;
        tree.push_back({std::min(v, w), std::max(v, w)});
        q.push(w);
      }
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

NormalizedCoverSpace::NormalizedCoverSpace(Graph g, int fold, std::uint64_t budget)
    : g_(std::move(g)), fold_(fold) {
  if (fold_ < 1) fail(Err::invalid_parameter, "fold must be >= 1");
  tree_ = canonical_spanning_forest(g_);
  for (const Edge& e : g_.edges())
    if (!std::binary_search(tree_.begin(), tree_.end(), e)) cotree_.push_back(e);
  // cotree_ is already lexicographic: edges() is sorted.
  std::uint64_t f = 1;
  bool overflow = false;
  for (int i = 2; i <= fold_; ++i) {
    if (f > budget / i) { overflow = true; break; }
    f *= i;
  }
  perms_per_edge_ = f;
  if (cotree_.empty()) {
    count_ = 1;
    return;
  }
  if (overflow ||
      !checked_pow_u64(perms_per_edge_, static_cast<unsigned>(cotree_.size()), budget, count_) ||
      count_ > budget)
    fail(Err::too_large, "(fold!)^rank exceeds the enumeration budget");
}

namespace {

// Permutation of [n] at lexicographic rank r (Lehmer decode).
std::vector<int> unrank_permutation(std::uint64_t r, int n) {
  std::vector<std::uint64_t> fact(n, 1);
  for (int i = 1; i < n; ++i) fact[i] = fact[i - 1] * i;
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> out;
  out.reserve(n);
  for (int i = n - 1; i >= 0; --i) {
    std::uint64_t d = r / fact[i];
    r %= fact[i];
    out.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<long>(d));
  }
  return out;
}

}  // namespace

Cover NormalizedCoverSpace::at(std::uint64_t index) const {
  if (index >= count_) fail(Err::invalid_parameter, "cover index out of range");
  std::vector<EdgeMap> maps;
  std::vector<int> id(fold_);
  std::iota(id.begin(), id.end(), 0);
  for (const Edge& e : tree_) maps.push_back({e.u, e.v, id});
  // Mixed-radix digits, most significant on the first cotree edge so the
  // stream is lexicographic in (edge order, permutation rank).
  int k = static_cast<int>(cotree_.size());
  std::vector<std::uint64_t> digit(k, 0);
  for (int i = k - 1; i >= 0; --i) {
    digit[i] = index % perms_per_edge_;
    index /= perms_per_edge_;
  }
  for (int i = 0; i < k; ++i)
    maps.push_back({cotree_[i].u, cotree_[i].v, unrank_permutation(digit[i], fold_)});
  return Cover::build(g_, fold_, maps);
}

std::uint64_t count_transversal_colorings(const Cover& c) {
  int n = c.base().vertex_count();
  std::uint64_t total = 0;
  std::vector<int> pick(n, -1);
  auto conflicts = [&](int v, int color) {
    for (int w : c.base().neighbors(v)) {
      if (pick[w] < 0) continue;
      if (c.image(v, w, color) == pick[w]) return true;
    }
    return false;
  };
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++total;
      return;
    }
    for (int color = 0; color < c.fold(); ++color) {
      if (conflicts(v, color)) continue;
      pick[v] = color;
      self(self, v + 1);
      pick[v] = -1;
    }
  };
  rec(rec, 0);
  return total;
}

}  // namespace dpfrac
