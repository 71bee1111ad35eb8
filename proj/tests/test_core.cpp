#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "colored_graph.hpp"
#include "errors.hpp"
#include "oracles.hpp"
#include "rng.hpp"

using namespace rainbowlab;

namespace {

ColoredGraph rainbow_k3() { return ColoredGraph::build(3, {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}}); }

// Relabels vertices by perm and colors by an injective map.
ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& perm,
                     const std::vector<int>& color_map) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edge_list()) {
    int u = perm[static_cast<size_t>(e.u)];
    int v = perm[static_cast<size_t>(e.v)];
    edges.push_back({std::min(u, v), std::max(u, v), color_map[static_cast<size_t>(e.color)]});
  }
  return ColoredGraph::build(g.n(), edges);
}

}  // namespace

TEST_CASE("build rejects malformed edge lists") {
  CHECK_THROWS_AS(ColoredGraph::build(2, {{0, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(ColoredGraph::build(2, {{0, 2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(ColoredGraph::build(2, {{-1, 1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(ColoredGraph::build(2, {{0, 1, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(ColoredGraph::build(3, {{0, 1, 0}, {1, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(ColoredGraph::build(-1, {}), std::invalid_argument);
  // Positional context in the message.
  try {
    ColoredGraph::build(3, {{0, 1, 0}, {1, 1, 0}});
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("edges[1]") != std::string::npos);
  }
}

TEST_CASE("build accepts idempotent duplicates and normalizes order") {
  ColoredGraph g = ColoredGraph::build(3, {{2, 0, 7}, {0, 2, 7}, {1, 0, 3}});
  CHECK(g.edge_count() == 2);
  CHECK(g.color_at(0, 2) == 7);
  CHECK(g.color_at(2, 0) == 7);
  CHECK(g.color_at(1, 2) == kNoEdge);
  std::vector<Edge> edges = g.edge_list();
  REQUIRE(edges.size() == 2);
  CHECK(edges[0].u == 0);
  CHECK(edges[0].v == 1);
  CHECK(edges[0].color == 3);
  CHECK(edges[1].u == 0);
  CHECK(edges[1].v == 2);
  CHECK(edges[1].color == 7);
}

TEST_CASE("basic accessors on known graphs") {
  ColoredGraph g = rainbow_k3();
  CHECK(g.n() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.color_count() == 3);
  CHECK(g.color_set() == std::vector<int>{0, 1, 2});
  CHECK(g.degree(0) == 2);
  CHECK(underlying_complete(g));
  CHECK(is_rainbow(g));

  ColoredGraph mono = ColoredGraph::complete_monochromatic(4, 9);
  CHECK(mono.edge_count() == 6);
  CHECK(mono.color_count() == 1);
  CHECK(mono.color_set() == std::vector<int>{9});
  CHECK(underlying_complete(mono));
  CHECK_FALSE(is_rainbow(mono));

  ColoredGraph k1 = ColoredGraph::build(1, {});
  CHECK(underlying_complete(k1));
  CHECK(is_rainbow(k1));
}

TEST_CASE("stats agree with brute force on random graphs") {
  Rng rng(101);
  for (int round = 0; round < 200; ++round) {
    int n = 1 + rng.below_int(10);
    ColoredGraph g = oracle::random_graph(rng, n, 0.1 + 0.8 * rng.next_double(),
                                          1 + rng.below_int(8));
    GraphStats st = stats(g);
    CHECK(st.e == g.edge_count());
    CHECK(st.c == g.color_count());
    std::vector<int> expected_colors(g.color_set());
    CHECK(st.colors == expected_colors);
    int min_cd = n == 0 ? 0 : std::numeric_limits<int>::max();
    for (int v = 0; v < n; ++v) {
      std::set<int> cn = oracle::color_nbhd(g, v);
      CHECK(st.color_degree[static_cast<size_t>(v)] == static_cast<int>(cn.size()));
      CHECK(st.degree[static_cast<size_t>(v)] == g.degree(v));
      std::vector<int> cn_sorted(cn.begin(), cn.end());
      CHECK(st.color_neighborhood[static_cast<size_t>(v)] == cn_sorted);
      CHECK(color_neighborhood(g, v) == cn_sorted);
      min_cd = std::min(min_cd, static_cast<int>(cn.size()));
    }
    if (n > 0) CHECK(st.min_color_degree == min_cd);
  }
}

TEST_CASE("cn_union agrees with brute force") {
  Rng rng(202);
  for (int round = 0; round < 100; ++round) {
    int n = 2 + rng.below_int(9);
    ColoredGraph g = oracle::random_graph(rng, n, 0.5, 1 + rng.below_int(6));
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        CHECK(cn_union(g, u, v) == oracle::cn_union(g, u, v));
      }
    }
  }
}

TEST_CASE("scoped color neighborhood restricts the endpoint set") {
  ColoredGraph g = ColoredGraph::build(4, {{0, 1, 0}, {0, 2, 1}, {0, 3, 1}, {1, 2, 2}});
  CHECK(color_neighborhood(g, 0) == std::vector<int>{0, 1});
  CHECK(color_neighborhood(g, 0, {1, 2}) == std::vector<int>{0, 1});
  CHECK(color_neighborhood(g, 0, {3}) == std::vector<int>{1});
  CHECK(color_neighborhood(g, 0, {}) == std::vector<int>{});
}

TEST_CASE("saturated degree equals the deletion recount") {
  Rng rng(303);
  for (int round = 0; round < 150; ++round) {
    int n = 1 + rng.below_int(10);
    ColoredGraph g = oracle::random_graph(rng, n, 0.4, 1 + rng.below_int(5));
    std::vector<int> all = saturated_degrees(g);
    REQUIRE(static_cast<int>(all.size()) == n);
    long long sum = 0;
    for (int v = 0; v < n; ++v) {
      CHECK(saturated_degree(g, v) == oracle::saturated_degree(g, v));
      CHECK(all[static_cast<size_t>(v)] == oracle::saturated_degree(g, v));
      sum += all[static_cast<size_t>(v)];
    }
    CHECK(sum <= 2 * g.color_count());
  }
}

TEST_CASE("subgraph selectors") {
  ColoredGraph g =
      ColoredGraph::build(5, {{0, 1, 0}, {0, 2, 1}, {1, 2, 2}, {2, 3, 3}, {3, 4, 4}});

  ColoredGraph ind = subgraph(g, Induced{{0, 2, 3}});
  CHECK(ind.n() == 3);
  CHECK(ind.color_at(0, 1) == 1);  // 0-2 in the host
  CHECK(ind.color_at(1, 2) == 3);  // 2-3 in the host
  CHECK(ind.color_at(0, 2) == kNoEdge);

  ColoredGraph del = subgraph(g, DeleteVertex{2});
  CHECK(del.n() == 4);
  CHECK(del.edge_count() == 2);
  CHECK(del.color_at(0, 1) == 0);
  CHECK(del.color_at(2, 3) == 4);  // old 3-4

  ColoredGraph noedge = subgraph(g, DeleteEdge{1, 2});
  CHECK(noedge.n() == 5);
  CHECK(noedge.edge_count() == 4);
  CHECK(noedge.color_at(1, 2) == kNoEdge);
  CHECK(noedge.color_at(0, 1) == 0);

  ColoredGraph cross = subgraph(g, Cross{{0, 1}, {2, 3}});
  CHECK(cross.n() == 4);
  CHECK(cross.edge_count() == 2);  // 0-2 and 1-2 survive, 2-3 does not

  std::vector<int> map;
  ColoredGraph mapped = induced_with_map(g, {1, 3, 4}, &map);
  CHECK(mapped.n() == 3);
  CHECK(map == std::vector<int>{1, 3, 4});
  CHECK(mapped.color_at(1, 2) == 4);
}

TEST_CASE("canonical key is invariant under relabeling") {
  Rng rng(404);
  for (int round = 0; round < 60; ++round) {
    int n = 1 + rng.below_int(7);
    ColoredGraph g = oracle::random_graph(rng, n, 0.5, 1 + rng.below_int(6));
    std::string key = canonical_key(g);

    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    std::vector<int> color_map(16);
    std::iota(color_map.begin(), color_map.end(), 0);
    rng.shuffle(color_map);
    for (int& c : color_map) c += 100;  // injective, disjoint from originals

    CHECK(canonical_key(relabel(g, perm, color_map)) == key);
  }
}

TEST_CASE("canonical key distinguishes structure") {
  ColoredGraph triangle = ColoredGraph::complete_monochromatic(3);
  ColoredGraph path = ColoredGraph::build(3, {{0, 1, 0}, {1, 2, 0}});
  CHECK(canonical_key(triangle) != canonical_key(path));
  CHECK(canonical_key(rainbow_k3()) != canonical_key(triangle));

  // Same partition shape, different labels: equal keys.
  ColoredGraph a = ColoredGraph::build(3, {{0, 1, 0}, {1, 2, 0}, {0, 2, 1}});
  ColoredGraph b = ColoredGraph::build(3, {{0, 1, 5}, {1, 2, 9}, {0, 2, 5}});
  CHECK(canonical_key(a) == canonical_key(b));
  // Different partition shape on the same underlying graph: different keys.
  ColoredGraph c = ColoredGraph::build(3, {{0, 1, 5}, {1, 2, 9}, {0, 2, 2}});
  CHECK(canonical_key(a) != canonical_key(c));
}

TEST_CASE("canonical key guard") {
  CHECK_THROWS_AS(canonical_key(ColoredGraph::complete_monochromatic(13)), GuardError);
}

TEST_CASE("rng streams are deterministic") {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 20; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng s1 = Rng::for_stream(7, 1);
  Rng s2 = Rng::for_stream(7, 2);
  CHECK(s1.next_u64() != s2.next_u64());
  Rng s1_again = Rng::for_stream(7, 1);
  CHECK(Rng::for_stream(7, 1).next_u64() == s1_again.next_u64());
}
