#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <memory>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "colored_graph.hpp"
#include "enumerate.hpp"
#include "families.hpp"
#include "oracles.hpp"
#include "rainbow.hpp"
#include "reduction.hpp"
#include "rng.hpp"
#include "spanning_bipartite.hpp"

using namespace rainbowlab;

namespace {

ColoredGraph rainbow_complete(int n) {
  std::vector<Edge> edges;
  int c = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, c++});
  return ColoredGraph::build(n, edges);
}

void check_bipartition_contract(const ColoredGraph& g, const BipartitionState& st) {
  REQUIRE(st.in_y.size() == static_cast<size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) CHECK(bipartite_inequality_holds(g, st.in_y, v));
  CHECK(st.potential == bipartite_potential(g, st.in_y));
  long long prev = -1;
  for (const BipartiteMove& m : st.moves) {
    CHECK(m.f_after > m.f_before);
    if (prev >= 0) CHECK(m.f_before == prev);
    prev = m.f_after;
  }
  if (!st.moves.empty()) CHECK(st.moves.back().f_after == st.potential);
  auto xs = st.side_x();
  auto ys = st.side_y();
  CHECK(static_cast<int>(xs.size() + ys.size()) == g.n());
  for (int v : xs) CHECK(st.in_y[static_cast<size_t>(v)] == 0);
  for (int v : ys) CHECK(st.in_y[static_cast<size_t>(v)] != 0);
}

}  // namespace

TEST_CASE("bipartite potential on a handmade split") {
  ColoredGraph g = ColoredGraph::build(3, {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}});
  std::vector<char> in_y = {0, 1, 1};
  // Cross edges (0,1) and (0,2): e(H) = 2, cross color degrees 2, 1, 1.
  CHECK(bipartite_potential(g, in_y) == 6);
  CHECK(cross_degree(g, in_y, 0) == 2);
  CHECK(cross_color_degree(g, in_y, 0) == 2);
  CHECK(cross_degree(g, in_y, 1) == 1);
  CHECK(cross_color_degree(g, in_y, 2) == 1);
}

TEST_CASE("spanning bipartite extraction satisfies the per-vertex inequality") {
  Rng rng(81);
  for (int round = 0; round < 200; ++round) {
    int n = 1 + rng.below_int(25);
    ColoredGraph g = oracle::random_graph(rng, n, 0.15 + 0.7 * rng.next_double(),
                                          1 + rng.below_int(10));
    check_bipartition_contract(g, spanning_bipartite(g));
  }
}

TEST_CASE("spanning bipartite respects seed sides") {
  Rng rng(82);
  for (int round = 0; round < 60; ++round) {
    int n = 2 + rng.below_int(12);
    ColoredGraph g = oracle::random_graph(rng, n, 0.6, 1 + rng.below_int(6));
    std::vector<char> seed(static_cast<size_t>(n));
    for (auto& s : seed) s = rng.chance(0.5) ? 1 : 0;
    BipartitionState st = spanning_bipartite(g, seed);
    check_bipartition_contract(g, st);
    if (st.moves.empty()) {
      CHECK(st.in_y == seed);
    } else {
      CHECK(st.moves.front().f_before == bipartite_potential(g, seed));
    }
  }
  CHECK_THROWS_AS(spanning_bipartite(rainbow_complete(3), std::vector<char>{0, 1}),
                  std::invalid_argument);
}

TEST_CASE("spanning bipartite on tiny graphs") {
  ColoredGraph k1 = ColoredGraph::build(1, {});
  BipartitionState st = spanning_bipartite(k1);
  CHECK(st.potential == 0);
  CHECK(st.moves.empty());

  ColoredGraph k2 = ColoredGraph::build(2, {{0, 1, 4}});
  BipartitionState st2 = spanning_bipartite(k2);
  check_bipartition_contract(k2, st2);
  CHECK(st2.potential == 3);  // one cross edge, cross color degree 1 at each end
}

TEST_CASE("reduction context invariants on random hosts") {
  Rng rng(83);
  int built = 0;
  for (int round = 0; round < 300 && built < 200; ++round) {
    int n = 4 + rng.below_int(9);
    ColoredGraph g = oracle::random_graph(rng, n, 0.7, 1 + rng.below_int(8));
    auto edges = g.edge_list();
    if (edges.empty()) continue;
    Edge e = edges[rng.below(edges.size())];
    ReductionContext ctx = build_reduction(g, e.u, e.v);
    ++built;
    CHECK(ctx.u == e.u);
    CHECK(ctx.v == e.v);
    CHECK(ctx.uv_color == e.color);
    CHECK(ctx.condition_holds());
    CHECK(ctx.is_maximal());
    CHECK(ctx.cn_union_uv == oracle::cn_union(g, e.u, e.v));
    CHECK(std::is_sorted(ctx.s1.begin(), ctx.s1.end()));
    CHECK(std::is_sorted(ctx.s2.begin(), ctx.s2.end()));
    std::set<int> seen_vertices = {ctx.u, ctx.v};
    std::set<int> seen_colors = {ctx.uv_color};
    REQUIRE(ctx.s1_colors.size() == ctx.s1.size());
    REQUIRE(ctx.s2_colors.size() == ctx.s2.size());
    for (size_t i = 0; i < ctx.s1.size(); ++i) {
      int w = ctx.s1[i];
      CHECK(g.color_at(ctx.u, w) == ctx.s1_colors[i]);
      CHECK(ctx.anchor_color(w) == ctx.s1_colors[i]);
      CHECK(seen_vertices.insert(w).second);
      CHECK(seen_colors.insert(ctx.s1_colors[i]).second);
    }
    for (size_t j = 0; j < ctx.s2.size(); ++j) {
      int w = ctx.s2[j];
      CHECK(g.color_at(ctx.v, w) == ctx.s2_colors[j]);
      CHECK(ctx.anchor_color(w) == ctx.s2_colors[j]);
      CHECK(seen_vertices.insert(w).second);
      CHECK(seen_colors.insert(ctx.s2_colors[j]).second);
    }
    CHECK(ctx.selected() == static_cast<long long>(ctx.s1.size() + ctx.s2.size()));
  }
  CHECK(built >= 100);
}

TEST_CASE("reduction context rejects non-edges") {
  ColoredGraph g = ColoredGraph::build(3, {{0, 1, 0}});
  CHECK_THROWS_AS(build_reduction(g, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_reduction(g, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_reduction(g, 0, 5), std::invalid_argument);
}

TEST_CASE("cycle digraph arcs carry the head anchor color") {
  Rng rng(84);
  int digraphs = 0;
  int witnesses = 0;
  for (int round = 0; round < 300; ++round) {
    int n = 4 + rng.below_int(8);
    ColoredGraph g = oracle::random_graph(rng, n, 0.75, 1 + rng.below_int(5));
    auto edges = g.edge_list();
    if (edges.empty()) continue;
    Edge e = edges[rng.below(edges.size())];
    ReductionContext ctx = build_reduction(g, e.u, e.v);
    auto out = build_cycle_digraph(ctx);
    if (std::holds_alternative<CycleWitness>(out)) {
      ++witnesses;
      const CycleWitness& w = std::get<CycleWitness>(out);
      CHECK(w.validate(g));
      CHECK(w.length() <= 5);
      continue;
    }
    ++digraphs;
    const CycleDigraph& d = std::get<CycleDigraph>(out);
    CHECK(d.n == static_cast<int>(ctx.selected()));
    REQUIRE(d.vertex_ids.size() == static_cast<size_t>(d.n));
    REQUIRE(d.side.size() == static_cast<size_t>(d.n));
    REQUIRE(d.arc.size() == static_cast<size_t>(d.n));
    for (size_t i = 0; i < ctx.s1.size(); ++i) {
      CHECK(d.vertex_ids[i] == ctx.s1[i]);
      CHECK(d.side[i] == 0);
    }
    for (size_t j = 0; j < ctx.s2.size(); ++j) {
      CHECK(d.vertex_ids[ctx.s1.size() + j] == ctx.s2[j]);
      CHECK(d.side[ctx.s1.size() + j] == 1);
    }
    long long arcs = 0;
    int min_out = d.n > 0 ? d.n : 0;
    for (int a = 0; a < d.n; ++a) {
      int out_deg = 0;
      for (int b = 0; b < d.n; ++b) {
        if (!d.arc[static_cast<size_t>(a)][static_cast<size_t>(b)]) continue;
        ++arcs;
        ++out_deg;
        CHECK(a != b);
        CHECK_FALSE(d.arc[static_cast<size_t>(b)][static_cast<size_t>(a)]);
        int hu = d.vertex_ids[static_cast<size_t>(a)];
        int hv = d.vertex_ids[static_cast<size_t>(b)];
        CHECK(g.color_at(hu, hv) == ctx.anchor_color(hv));
      }
      CHECK(d.out_degree(a) == out_deg);
      min_out = std::min(min_out, out_deg);
    }
    CHECK(d.arc_count() == arcs);
    if (d.n > 0) CHECK(d.min_out_degree() == min_out);
  }
  CHECK(digraphs > 0);
  CHECK(witnesses > 0);
}

TEST_CASE("a handmade reduction lifts a directed cycle back to a rainbow cycle") {
  // Vertex 1 is only adjacent to 0, so the selection is S1 = {2, 3, 4} with
  // anchor colors 0, 1, 2. The inner edges each repeat one anchor color and
  // orient into the 3-cycle 2 -> 3 -> 4 -> 2.
  ColoredGraph g = ColoredGraph::build(
      5, {{0, 1, 100}, {0, 2, 0}, {0, 3, 1}, {0, 4, 2}, {2, 3, 1}, {3, 4, 2}, {2, 4, 0}});
  ReductionContext ctx = build_reduction(g, 0, 1);
  CHECK(ctx.s1 == std::vector<int>{2, 3, 4});
  CHECK(ctx.s2.empty());
  auto out = build_cycle_digraph(ctx);
  REQUIRE(std::holds_alternative<CycleDigraph>(out));
  const CycleDigraph& d = std::get<CycleDigraph>(out);
  CHECK(d.n == 3);
  CHECK(d.arc_count() == 3);
  CHECK(d.min_out_degree() == 1);
  DirectedPackingResult packed = pack_directed_cycles(d, 1);
  REQUIRE(packed.outcome == SearchOutcome::Found);
  REQUIRE(packed.cycles.size() == 1);
  std::vector<CycleWitness> lifted = lift_cycles(ctx, packed.cycles);
  REQUIRE(lifted.size() == 1);
  CHECK(lifted[0].vertices == std::vector<int>{2, 3, 4});
  CHECK(lifted[0].validate(g));
}

TEST_CASE("directed cycle packing matches brute force on small digraphs") {
  Rng rng(85);
  int found = 0;
  int absent = 0;
  for (int round = 0; round < 300; ++round) {
    int n = 2 + rng.below_int(7);
    CycleDigraph d;
    d.n = n;
    d.vertex_ids.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) d.vertex_ids[static_cast<size_t>(i)] = i;
    d.side.assign(static_cast<size_t>(n), 0);
    d.arc.assign(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
    double p = 0.1 + 0.5 * rng.next_double();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && rng.chance(p)) d.arc[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
    for (int k = 1; k <= 2; ++k) {
      DirectedPackingResult res = pack_directed_cycles(d, k);
      REQUIRE(res.outcome != SearchOutcome::Unknown);
      bool expect = oracle::can_pack_directed(d.arc, k);
      if (res.outcome == SearchOutcome::Found) {
        ++found;
        CHECK(expect);
        REQUIRE(static_cast<int>(res.cycles.size()) == k);
        std::vector<char> used(static_cast<size_t>(n), 0);
        for (const DirectedCycle& c : res.cycles) {
          REQUIRE(c.vertices.size() >= 2);
          CHECK(c.vertices.front() == *std::min_element(c.vertices.begin(), c.vertices.end()));
          for (size_t i = 0; i < c.vertices.size(); ++i) {
            int a = c.vertices[i];
            int b = c.vertices[(i + 1) % c.vertices.size()];
            CHECK(d.arc[static_cast<size_t>(a)][static_cast<size_t>(b)]);
            CHECK_FALSE(used[static_cast<size_t>(a)]);
            used[static_cast<size_t>(a)] = 1;
          }
        }
      } else {
        ++absent;
        CHECK_FALSE(expect);
      }
    }
  }
  CHECK(found > 0);
  CHECK(absent > 0);
}

TEST_CASE("packing argument validation") {
  CycleDigraph d;
  d.n = 1;
  d.vertex_ids = {0};
  d.side = {0};
  d.arc = {{0}};
  CHECK_THROWS_AS(pack_directed_cycles(d, 0), std::invalid_argument);
}

TEST_CASE("heuristic finds disjoint rainbow cycles in rainbow complete graphs") {
  ColoredGraph g = rainbow_complete(12);
  for (int constant : {64, 18}) {
    HeuristicTrace trace;
    auto cycles = find_disjoint_rainbow_cycles_heuristic(g, 2, constant, &trace);
    REQUIRE(cycles.has_value());
    CHECK(cycles->size() == 2);
    CHECK(trace.found);
    std::vector<char> used(12, 0);
    for (const CycleWitness& w : *cycles) {
      CHECK(w.validate(g));
      for (int v : w.vertices) {
        CHECK_FALSE(used[static_cast<size_t>(v)]);
        used[static_cast<size_t>(v)] = 1;
      }
    }
  }
}

TEST_CASE("heuristic reports a miss on monochromatic hosts") {
  ColoredGraph g = ColoredGraph::complete_monochromatic(8);
  HeuristicTrace trace;
  auto cycles = find_disjoint_rainbow_cycles_heuristic(g, 1, 64, &trace);
  CHECK_FALSE(cycles.has_value());
  CHECK_FALSE(trace.found);
  CHECK(trace.greedy_cycles == 0);
  CHECK(trace.anchors_tried > 0);
}

TEST_CASE("heuristic argument validation") {
  CHECK_THROWS_AS(find_disjoint_rainbow_cycles_heuristic(rainbow_complete(4), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(find_disjoint_rainbow_cycles_heuristic(rainbow_complete(4), 1, 0),
                  std::invalid_argument);
}
