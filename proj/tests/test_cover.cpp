#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpfrac/cover.hpp"
#include "dpfrac/error.hpp"
#include "dpfrac/rng.hpp"
#include "dpfrac/solver.hpp"
#include "oracles.hpp"

using namespace dpfrac;

namespace {

std::vector<int> identity_map(int fold) {
  std::vector<int> id(fold);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

}  // namespace

TEST_CASE("build validates the cover conditions") {
  Graph c3 = Graph::cycle(3);

  Cover ok = Cover::identity(c3, 3);
  CHECK(ok.full());

  // non-injective map: both colors of u to color 0 of v
  CHECK_THROWS_WITH_AS(Cover::build(c3, 2, {{0, 1, {0, 0}}}), doctest::Contains("condition-4"),
                       Error);
  // map on a non-edge
  Graph p3 = Graph::path(3);
  CHECK_THROWS_WITH_AS(Cover::build(p3, 2, {{0, 2, {0, 1}}}), doctest::Contains("condition-3"),
                       Error);
  // out-of-range color
  CHECK_THROWS_WITH_AS(Cover::build(c3, 2, {{0, 1, {0, 5}}}), doctest::Contains("invalid-color"),
                       Error);
  // empty matchings are fine and leave the cover partial
  Cover partial = Cover::build(Graph::complete_bipartite(2, 3), 5,
                               {{0, 2, std::vector<int>(5, -1)}});
  CHECK(!partial.full());
}

TEST_CASE("orientation handling: a map given as (v,u) is stored inverted") {
  Graph p2 = Graph::path(2);
  Cover a = Cover::build(p2, 3, {{0, 1, {2, 0, 1}}});
  Cover b = Cover::build(p2, 3, {{1, 0, {1, 2, 0}}});
  CHECK(a == b);
  CHECK(a.image(0, 1, 0) == 2);
  CHECK(a.image(1, 0, 2) == 0);
}

TEST_CASE("completion uses the lowest-unused-target rule") {
  Graph p2 = Graph::path(2);
  Cover empty = Cover::build(p2, 2, {});
  Cover done = empty.completed();
  CHECK(done.full());
  CHECK(done.image(0, 1, 0) == 0);
  CHECK(done.image(0, 1, 1) == 1);

  Cover already = Cover::random_full(Graph::cycle(5), 4, 11);
  CHECK(already.completed() == already);

  // partially matched: 1 -> 0 fixed, color 0 takes the lowest free target
  Cover part = Cover::build(p2, 3, {{0, 1, {-1, 0, -1}}});
  Cover comp = part.completed();
  CHECK(comp.image(0, 1, 1) == 0);
  CHECK(comp.image(0, 1, 0) == 1);
  CHECK(comp.image(0, 1, 2) == 2);
}

TEST_CASE("every coloring of a completion verifies against the original") {
  SplitMix64 rng(42);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = trial % 2 ? Graph::cycle(3 + trial % 4) : Graph::complete_bipartite(2, 2);
    int fold = 2 + static_cast<int>(rng.below(3));
    Cover partial = Cover::random_partial(g, fold, rng.next());
    int b = 1 + static_cast<int>(rng.below(fold));
    FindResult f = find_coloring(partial.completed(), b);
    if (f.outcome != FindResult::Outcome::found) continue;
    CHECK(verify_set_coloring(partial, f.coloring).ok());
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("normalization: identity tree maps, colorability preserved") {
  Graph c4 = Graph::cycle(4);
  SplitMix64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    Cover c = Cover::random_full(c4, 3, rng.next());
    auto [norm, info] = c.normalized(canonical_spanning_forest(c4));
    for (const Edge& e : info.tree_edges) {
      int idx = c4.edge_index(e.u, e.v);
      CHECK(norm.forward(idx)[0] == 0);
      CHECK(norm.forward(idx)[1] == 1);
      CHECK(norm.forward(idx)[2] == 2);
    }
    CHECK(count_transversal_colorings(c) == count_transversal_colorings(norm));
  }
}

TEST_CASE("normalization of an identity cover is the identity") {
  Graph c5 = Graph::cycle(5);
  Cover id = Cover::identity(c5, 3);
  auto [norm, info] = id.normalized(canonical_spanning_forest(c5));
  CHECK(norm == id);
  for (const auto& sigma : info.relabeling) CHECK(sigma == identity_map(3));
}

TEST_CASE("normalization works over any spanning tree, not just the canonical one") {
  Graph c4 = Graph::cycle(4);
  std::vector<Edge> other_tree = {{0, 3}, {2, 3}, {1, 2}};
  SplitMix64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    Cover c = Cover::random_full(c4, 3, rng.next());
    auto [norm, info] = c.normalized(other_tree);
    for (const Edge& e : info.tree_edges) {
      int idx = c4.edge_index(e.u, e.v);
      CHECK(norm.forward(idx)[1] == 1);
    }
    CHECK(info.cotree_edges == std::vector<Edge>{{0, 1}});
    CHECK(count_transversal_colorings(c) == count_transversal_colorings(norm));
    for (int b = 1; b <= 3; ++b)
      CHECK(find_coloring(c, b).outcome == find_coloring(norm, b).outcome);
  }
}

TEST_CASE("normalization rejections") {
  Graph c4 = Graph::cycle(4);
  Cover c = Cover::identity(c4, 1);
  CHECK_THROWS_WITH_AS(c.normalized(canonical_spanning_forest(c4)),
                       doctest::Contains("normalization-precondition"), Error);
  Cover partial = Cover::build(c4, 2, {});
  CHECK_THROWS_AS(partial.normalized(canonical_spanning_forest(c4)), Error);
  Cover full = Cover::identity(c4, 2);
  CHECK_THROWS_WITH_AS(full.normalized({{0, 1}, {1, 2}, {2, 3}, {0, 3}}),
                       doctest::Contains("invalid-tree"), Error);
  CHECK_THROWS_WITH_AS(full.normalized({{0, 1}}), doctest::Contains("invalid-tree"), Error);
}

TEST_CASE("tree covers: number of transversal colorings matches proper colorings") {
  SplitMix64 rng(9);
  for (int n = 2; n <= 6; ++n) {
    for (int fold = 2; fold <= 4; ++fold) {
      Graph t = Graph::random_tree(n, rng.next());
      Cover c = Cover::random_full(t, fold, rng.next());
      std::uint64_t expect = fold;
      for (int i = 1; i < n; ++i) expect *= fold - 1;
      CHECK(count_transversal_colorings(c) == expect);
      CHECK(expect == oracle::proper_coloring_count(t, fold));
    }
  }
}

TEST_CASE("random covers are deterministic in the seed and valid") {
  Graph k23 = Graph::complete_bipartite(2, 3);
  Cover a = Cover::random_full(k23, 5, 77);
  Cover b = Cover::random_full(k23, 5, 77);
  CHECK(a == b);
  CHECK(a.full());
  CHECK(!(a == Cover::random_full(k23, 5, 78)));
  // build() accepts its own edge maps: validation passes
  Cover rebuilt = Cover::build(k23, 5, a.edge_maps());
  CHECK(rebuilt == a);
}

TEST_CASE("single-edge random covers are uniform over the two permutations") {
  Graph p2 = Graph::path(2);
  int identity_count = 0;
  const int samples = 100'000;
  for (int i = 0; i < samples; ++i) {
    Cover c = Cover::random_full(p2, 2, derive_seed(1234, i));
    if (c.image(0, 1, 0) == 0) ++identity_count;
  }
  // binomial: mean 50000, sd ~158; allow 4 standard deviations
  double sd = std::sqrt(samples * 0.25);
  CHECK(std::abs(identity_count - samples / 2.0) < 4 * sd);
}

TEST_CASE("list-assignment covers embed proper list coloring") {
  Graph c3 = Graph::cycle(3);
  Cover full3 = Cover::from_list_assignment(c3, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}});
  CHECK(full3 == Cover::identity(c3, 3));
  CHECK(find_coloring(full3, 1).outcome == FindResult::Outcome::found);

  Cover full2 = Cover::from_list_assignment(c3, {{1, 2}, {1, 2}, {1, 2}});
  CHECK(find_coloring(full2, 1).outcome == FindResult::Outcome::none);

  Graph c4 = Graph::cycle(4);
  std::vector<std::vector<int>> lists = {{1, 2}, {2, 3}, {3, 4}, {4, 1}};
  Cover lc = Cover::from_list_assignment(c4, lists);
  bool via_cover = find_coloring(lc, 1).outcome == FindResult::Outcome::found;
  CHECK(via_cover == oracle::list_colorable(c4, lists));

  CHECK_THROWS_WITH_AS(Cover::from_list_assignment(c3, {{1, 2}, {1}, {1, 2}}),
                       doctest::Contains("invalid-assignment"), Error);
}

TEST_CASE("normalized cover space sizes") {
  CHECK(NormalizedCoverSpace(Graph::cycle(5), 5, 1'000'000).count() == 120);
  CHECK(NormalizedCoverSpace(Graph::random_tree(6, 3), 4, 1'000).count() == 1);
  CHECK(NormalizedCoverSpace(Graph::complete_bipartite(2, 3), 5, 1'000'000).count() == 14400);
  CHECK_THROWS_WITH_AS(NormalizedCoverSpace(Graph::complete_bipartite(3, 3), 6, 100'000),
                       doctest::Contains("too-large"), Error);
}

TEST_CASE("normalized cover space streams distinct, normalized covers") {
  Graph c4 = Graph::cycle(4);
  NormalizedCoverSpace space(c4, 2, 100);
  REQUIRE(space.count() == 2);
  Cover first = space.at(0);
  Cover second = space.at(1);
  CHECK(!(first == second));
  CHECK(first == Cover::identity(c4, 2));
  // tree edges carry the identity in every streamed cover
  for (std::uint64_t i = 0; i < space.count(); ++i) {
    Cover c = space.at(i);
    for (const Edge& e : space.tree_edges()) {
      int idx = c4.edge_index(e.u, e.v);
      CHECK(c.forward(idx)[0] == 0);
    }
  }
  CHECK_THROWS_AS(space.at(2), Error);
}

TEST_CASE("cover space partitions consistently by index") {
  NormalizedCoverSpace space(Graph::cycle(5), 3, 1'000);
  REQUIRE(space.count() == 6);
  // lexicographic: index 0 is the identity twist, last is the reversal
  CHECK(space.at(0) == Cover::identity(Graph::cycle(5), 3));
  std::vector<Cover> all;
  for (std::uint64_t i = 0; i < 6; ++i) all.push_back(space.at(i));
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) CHECK(!(all[i] == all[j]));
}
