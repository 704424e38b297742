#include "dpfrac/solver.hpp"

#include <algorithm>
#include <bit>

#include "dpfrac/error.hpp"
#include "dpfrac/numbers.hpp"

namespace dpfrac {

SetColoring SetColoring::trimmed() const {
  SetColoring out;
  out.b = b;
  out.selection.reserve(selection.size());
  for (const auto& s : selection) {
    std::vector<int> t(s.begin(), s.begin() + std::min<size_t>(s.size(), b));
    out.selection.push_back(std::move(t));
  }
  return out;
}

VerifyResult verify_set_coloring(const Cover& c, const SetColoring& s) {
  const Graph& g = c.base();
  if (static_cast<int>(s.selection.size()) != g.vertex_count())
    fail(Err::invalid_parameter, "selection must cover every vertex");
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int color : s.selection[v])
      if (color < 0 || color >= c.fold())
        fail(Err::invalid_color, "selected color out of range at vertex " + std::to_string(v));

  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges()[e];
    auto fwd = c.forward(e);
    for (int cu : s.selection[ed.u]) {
      int img = fwd[cu];
      if (img < 0) continue;
      for (int cv : s.selection[ed.v]) {
        if (cv == img) {
          VerifyResult r;
          r.kind = VerifyResult::Kind::violation;
          r.u = ed.u;
          r.v = ed.v;
          r.cu = cu;
          r.cv = cv;
          return r;
        }
      }
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (static_cast<int>(s.selection[v].size()) < s.b) {
      VerifyResult r;
      r.kind = VerifyResult::Kind::deficient;
      r.vertex = v;
      return r;
    }
  }
  return {};
}

namespace {

using Mask = std::uint64_t;

struct Searcher {
  const Cover& cover;
  int n, fold, b;
  Mask all;
  std::uint64_t budget, nodes = 0;
  SearchOrder order;
  std::vector<Mask> forbidden;
  std::vector<Mask> chosen;  // 0 = unassigned (all-zero mask is never a choice for b >= 1)
  std::vector<char> assigned;
  // (neighbor, fold-length map) pairs per vertex, prebuilt for the hot loop
  std::vector<std::vector<std::pair<int, const int*>>> out_maps;
  bool found = false;
  std::vector<Mask> result;

  Searcher(const Cover& c, int b_, std::uint64_t budget_, SearchOrder order_)
      : cover(c),
        n(c.base().vertex_count()),
        fold(c.fold()),
        b(b_),
        all(fold == 64 ? ~Mask{0} : (Mask{1} << fold) - 1),
        budget(budget_),
        order(order_),
        forbidden(n, 0),
        chosen(n, 0),
        assigned(n, 0),
        out_maps(n) {
    const Graph& g = c.base();
    for (int e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edges()[e];
      out_maps[ed.u].emplace_back(ed.v, c.forward(e).data());
      out_maps[ed.v].emplace_back(ed.u, c.backward(e).data());
    }
  }

  int pick_vertex() const {
    if (order == SearchOrder::reverse_index) {
      for (int v = n - 1; v >= 0; --v)
        if (!assigned[v]) return v;
      return -1;
    }
    int best = -1, best_avail = fold + 1;
    for (int v = 0; v < n; ++v) {
      if (assigned[v]) continue;
      int avail = std::popcount(static_cast<Mask>(~forbidden[v] & all));
      if (avail < best_avail) {
        best_avail = avail;
        best = v;
      }
    }
    return best;
  }

  // True when search completed the whole subtree (false = budget ran out).
  bool search(int depth) {
    if (depth == n) {
      found = true;
      result = chosen;
      return true;
    }
    int v = pick_vertex();
    Mask avail = ~forbidden[v] & all;
    if (std::popcount(avail) < b) return true;  // dead branch, fully explored

    std::vector<int> colors;
    colors.reserve(std::popcount(avail));
    for (Mask m = avail; m; m &= m - 1) colors.push_back(std::countr_zero(m));

    std::vector<int> idx(b);
    for (int i = 0; i < b; ++i) idx[i] = i;
    int k = static_cast<int>(colors.size());
    while (true) {
      if (++nodes > budget) return false;
      Mask pick = 0;
      for (int i : idx) pick |= Mask{1} << colors[static_cast<size_t>(i)];

      assigned[v] = 1;
      chosen[v] = pick;
      std::vector<std::pair<int, Mask>> undo;
      bool dead = false;
      for (auto [w, map] : out_maps[v]) {
        if (assigned[w]) continue;
        Mask add = 0;
        for (Mask m = pick; m; m &= m - 1) {
          int t = map[std::countr_zero(m)];
          if (t >= 0) add |= Mask{1} << t;
        }
        if (add & ~forbidden[w]) {
          undo.emplace_back(w, forbidden[w]);
          forbidden[w] |= add;
          if (std::popcount(static_cast<Mask>(~forbidden[w] & all)) < b) dead = true;
        }
      }
      if (!dead) {
        if (!search(depth + 1)) return false;
        if (found) return true;
      }
      for (auto& [w, old] : undo) forbidden[w] = old;
      assigned[v] = 0;
      chosen[v] = 0;

      // next lexicographic b-combination of colors
      int i = b - 1;
      while (i >= 0 && idx[i] == k - b + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < b; ++j) idx[j] = idx[j - 1] + 1;
    }
    return true;
  }
};

}  // namespace

FindResult find_coloring(const Cover& c, int b, std::uint64_t node_budget, SearchOrder order) {
  if (b < 0) fail(Err::invalid_parameter, "b must be >= 0");
  if (b > c.fold()) fail(Err::infeasible, "b exceeds the fold");
  if (c.fold() > 64) fail(Err::too_large, "search supports fold <= 64");

  FindResult out;
  int n = c.base().vertex_count();
  if (b == 0) {
    out.outcome = FindResult::Outcome::found;
    out.coloring.b = 0;
    out.coloring.selection.assign(n, {});
    return out;
  }
  Searcher s(c, b, node_budget, order);
  bool complete = s.search(0);
  out.nodes = s.nodes;
  if (s.found) {
    out.outcome = FindResult::Outcome::found;
    out.coloring.b = b;
    out.coloring.selection.assign(n, {});
    for (int v = 0; v < n; ++v)
      for (Mask m = s.result[v]; m; m &= m - 1)
        out.coloring.selection[v].push_back(std::countr_zero(m));
  } else {
    out.outcome = complete ? FindResult::Outcome::none : FindResult::Outcome::unknown;
  }
  return out;
}

}  // namespace dpfrac
