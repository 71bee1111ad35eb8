#include "checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

#include "enumerate.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "graph_io.hpp"
#include "rainbow.hpp"
#include "reduction.hpp"
#include "rng.hpp"
#include "spanning_bipartite.hpp"
#include "version.hpp"

namespace rainbowlab {

namespace {

constexpr std::pair<CheckId, const char*> kIdNames[] = {
    {CheckId::T1, "T1"},
    {CheckId::T2, "T2"},
    {CheckId::T3, "T3"},
    {CheckId::T4, "T4"},
    {CheckId::T5, "T5"},
    {CheckId::T6, "T6"},
    {CheckId::T7, "T7"},
    {CheckId::T8, "T8"},
    {CheckId::L_SAT, "L_SAT"},
    {CheckId::L_GALLAI_COLORS, "L_GALLAI_COLORS"},
    {CheckId::L_RADEMACHER, "L_RADEMACHER"},
    {CheckId::L_CKRY, "L_CKRY"},
    {CheckId::L_DISJ_C4, "L_DISJ_C4"},
    {CheckId::L_FIVE, "L_FIVE"},
    {CheckId::L_SPABIP, "L_SPABIP"},
    {CheckId::P_DISJ_C4, "P_DISJ_C4"},
    {CheckId::XF_TRIANGLE_FREE, "XF_TRIANGLE_FREE"},
};

enum class Verdict { True, False, Unknown };

struct Outcome {
  bool hypothesis = false;
  Verdict conclusion = Verdict::True;
  std::string reason;
  long long aux0 = 0;  // per-check side counter, see note assembly
  long long aux1 = 0;
};

void fail(Outcome& out, std::string reason) {
  out.conclusion = Verdict::False;
  out.reason = std::move(reason);
}

// Instance universes for exhaustive mode. SampleOnly marks checks whose
// hypothesis is empty at enumerable sizes.
enum class Domain { AllColorings, CompleteColorings, UncoloredMasks, SampleOnly };

Domain domain_of(CheckId id) {
  switch (id) {
    case CheckId::T6:
    case CheckId::T8:
      return Domain::SampleOnly;
    case CheckId::L_RADEMACHER:
      return Domain::UncoloredMasks;
    case CheckId::L_GALLAI_COLORS:
    case CheckId::L_FIVE:
      return Domain::CompleteColorings;
    default:
      return Domain::AllColorings;
  }
}

long long union_size(const std::vector<int>& a, const std::vector<int>& b) {
  size_t i = 0;
  size_t j = 0;
  long long count = 0;
  while (i < a.size() && j < b.size()) {
    ++count;
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return count + static_cast<long long>(a.size() - i) + static_cast<long long>(b.size() - j);
}

// min over vertex pairs of |CN(u) u CN(v)|; max() when n < 2.
long long min_pair_cn_union(const ColoredGraph& g) {
  GraphStats st = stats(g);
  long long best = std::numeric_limits<long long>::max();
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      best = std::min(best, union_size(st.color_neighborhood[u], st.color_neighborhood[v]));
    }
  }
  return best;
}

// Underlying graph is exactly K_{a,b} (a, b >= 1), checked by 2-coloring plus
// a full pair scan.
bool complete_bipartite_underlying(const ColoredGraph& g, int a, int b) {
  const int n = g.n();
  if (a < 1 || b < 1 || a + b != n) return false;
  std::vector<int> side(n, -1);
  std::vector<int> queue;
  side[0] = 0;
  queue.push_back(0);
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v = 0; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      if (side[v] == -1) {
        side[v] = 1 - side[u];
        queue.push_back(v);
      } else if (side[v] == side[u]) {
        return false;
      }
    }
  }
  int sz0 = 0;
  for (int v = 0; v < n; ++v) {
    if (side[v] == -1) return false;  // disconnected
    sz0 += side[v] == 0 ? 1 : 0;
  }
  int sz1 = n - sz0;
  if (!((sz0 == a && sz1 == b) || (sz0 == b && sz1 == a))) return false;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v) != (side[u] != side[v])) return false;
    }
  }
  return true;
}

bool all_disjoint_and_valid(const ColoredGraph& g, const std::vector<CycleWitness>& ws) {
  std::vector<char> used(g.n(), 0);
  for (const CycleWitness& w : ws) {
    if (!w.validate(g)) return false;
    for (int v : w.vertices) {
      if (used[v]) return false;
      used[v] = 1;
    }
  }
  return true;
}

Outcome evaluate_instance(CheckId id, const CheckConfig& cfg, const ColoredGraph& g) {
  Outcome out;
  const int n = g.n();
  const long long half_sum = static_cast<long long>(n) * (n + 1) / 2;
  switch (id) {
    case CheckId::T1: {
      out.hypothesis = n >= 3 && g.edge_count() + g.color_count() >= half_sum;
      if (!out.hypothesis) break;
      if (!find_rainbow_cycle(g, LengthSpec::exact(3)).has_value()) {
        fail(out, "no rainbow triangle despite e + c >= n(n+1)/2");
      }
      break;
    }
    case CheckId::T2: {
      out.hypothesis =
          g.edge_count() + g.color_count() >= half_sum - 1 && count_rainbow_triangles(g) == 0;
      if (!out.hypothesis) break;
      if (!membership_g0(g).has_value()) {
        fail(out, "not recognized by the zero-triangle layered join family");
      }
      break;
    }
    case CheckId::T3: {
      long long score = g.edge_count() + g.color_count();
      out.hypothesis = n >= 3 && score >= half_sum && count_rainbow_triangles(g) == 1;
      if (!out.hypothesis) break;
      out.aux0 = score > half_sum ? 1 : 0;
      if (!membership_g1(g).has_value()) {
        fail(out, "not recognized by the one-triangle layered join family");
      }
      break;
    }
    case CheckId::T4: {
      GraphStats st = stats(g);
      bool degree_ok = n > 0 && 2LL * st.min_color_degree >= n;
      out.hypothesis = n >= 5 && degree_ok && count_rainbow_triangles(g) == 0;
      if (!out.hypothesis) break;
      if (n % 2 != 0 || !complete_bipartite_underlying(g, n / 2, n / 2)) {
        fail(out, "underlying graph is not a balanced complete bipartite graph");
      }
      break;
    }
    case CheckId::T5: {
      out.hypothesis = n >= 4 && min_pair_cn_union(g) >= n - 1;
      if (!out.hypothesis) break;
      if (!find_rainbow_cycle(g, LengthSpec::at_most(4)).has_value()) {
        fail(out, "no rainbow cycle of length 3 or 4");
      }
      break;
    }
    case CheckId::T6: {
      out.hypothesis = n >= 105LL * cfg.k - 24 && min_pair_cn_union(g) >= n - 1;
      if (!out.hypothesis) break;
      long long found = count_rainbow_c4(g, cfg.k);
      if (found < cfg.k) {
        fail(out, "only " + std::to_string(found) + " rainbow 4-cycles, needed " +
                      std::to_string(cfg.k));
      }
      break;
    }
    case CheckId::T7: {
      out.hypothesis = n >= 6 && min_pair_cn_union(g) >= n - 1;
      if (!out.hypothesis) break;
      if (find_rainbow_cycle(g, LengthSpec::exact(3)).has_value()) break;
      if (complete_bipartite_underlying(g, (n + 1) / 2, n / 2) && is_rainbow(g)) {
        out.aux0 = 1;  // exception branch
        break;
      }
      fail(out, "no rainbow triangle and not a rainbow balanced complete bipartite graph");
      break;
    }
    case CheckId::T8: {
      // Pair bound n/2 + constant*k + 1 as 2|CN(u) u CN(v)| >= n + 2Ck + 2.
      // n >= 3 excludes the degenerate vacuously-true orders that cannot hold
      // a cycle at all.
      long long need = n + 2LL * cfg.constant * cfg.k + 2;
      out.hypothesis = n >= 3 && 2 * min_pair_cn_union(g) >= need;
      if (!out.hypothesis) break;
      if (n <= guards::kExactDisjointCyclesMaxN) {
        out.aux0 = 1;
        DisjointCyclesResult res = find_disjoint_rainbow_cycles(g, cfg.k, LengthSpec::any());
        if (res.outcome != SearchOutcome::Found || !all_disjoint_and_valid(g, res.cycles)) {
          fail(out, "fewer than k vertex-disjoint rainbow cycles (exact search)");
        }
      } else {
        auto found = find_disjoint_rainbow_cycles_heuristic(g, cfg.k, cfg.constant);
        if (found.has_value() && all_disjoint_and_valid(g, *found)) {
          out.aux1 = 1;
        } else {
          out.conclusion = Verdict::Unknown;
          out.reason = "heuristic search found no packing; existence undecided";
        }
      }
      break;
    }
    case CheckId::L_SAT: {
      out.hypothesis = true;
      std::vector<int> sd = saturated_degrees(g);
      long long sum = std::accumulate(sd.begin(), sd.end(), 0LL);
      long long c = g.color_count();
      bool rainbow = is_rainbow(g);
      if (sum > 2 * c) {
        fail(out, "saturated degree sum " + std::to_string(sum) + " exceeds 2c = " +
                      std::to_string(2 * c));
      } else if ((sum == 2 * c) != rainbow) {
        fail(out, rainbow ? "rainbow graph without saturated degree equality"
                          : "saturated degree equality on a non-rainbow graph");
      }
      break;
    }
    case CheckId::L_GALLAI_COLORS: {
      out.hypothesis = underlying_complete(g) && count_rainbow_triangles(g) == 0;
      if (!out.hypothesis) break;
      if (g.color_count() > n - 1) {
        fail(out, "complete graph without rainbow triangles uses more than n-1 colors");
        break;
      }
      if (n >= 2 && n <= guards::kGallaiDecomposeMaxN) {
        try {
          GallaiDecomposition d = gallai_decompose(g);
          if (!d.validate(g)) {
            fail(out, "substitution decomposition failed revalidation");
            break;
          }
          out.aux0 = 1;
        } catch (const std::exception& err) {
          fail(out, std::string("no substitution decomposition found: ") + err.what());
          break;
        }
      }
      break;
    }
    case CheckId::L_RADEMACHER: {
      out.hypothesis = g.edge_count() >= static_cast<long long>(n) * n / 4 + 1;
      if (!out.hypothesis) break;
      long long triangles = count_triangles(g);
      if (triangles < n / 2) {
        fail(out, "only " + std::to_string(triangles) + " triangles, needed " +
                      std::to_string(n / 2));
      }
      break;
    }
    case CheckId::L_CKRY: {
      GraphStats st = stats(g);
      out.hypothesis =
          count_triangles(g) == 0 && 3LL * (st.min_color_degree - 1) >= n && n >= 1;
      if (!out.hypothesis) break;
      if (!find_rainbow_cycle(g, LengthSpec::exact(4)).has_value()) {
        fail(out, "triangle-free with min color degree >= n/3 + 1 but no rainbow 4-cycle");
      }
      break;
    }
    case CheckId::L_DISJ_C4: {
      GraphStats st = stats(g);
      out.hypothesis = n >= cfg.k + 3 && count_triangles(g) == 0 &&
                       3LL * (st.min_color_degree - cfg.k) >= n;
      if (!out.hypothesis) break;
      long long found = count_rainbow_c4(g, cfg.k);
      if (found < cfg.k) {
        fail(out, "only " + std::to_string(found) + " rainbow 4-cycles, needed " +
                      std::to_string(cfg.k));
      }
      break;
    }
    case CheckId::L_FIVE: {
      GraphStats st = stats(g);
      out.hypothesis = n >= 1 && st.min_color_degree == n - 1;
      if (!out.hypothesis) break;
      if (n < 5) break;  // no 5-subsets; the claim is vacuous
      std::vector<int> pick(5);
      std::iota(pick.begin(), pick.end(), 0);
      while (true) {
        ColoredGraph sub = subgraph(g, Induced{pick});
        if (!find_rainbow_cycle(sub, LengthSpec::exact(4)).has_value()) {
          std::string subset;
          for (int v : pick) subset += (subset.empty() ? "" : ",") + std::to_string(v);
          fail(out, "five-vertex subset {" + subset + "} induces no rainbow 4-cycle");
          break;
        }
        int i = 4;
        while (i >= 0 && pick[i] == n - 5 + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < 5; ++j) pick[j] = pick[j - 1] + 1;
      }
      break;
    }
    case CheckId::L_SPABIP: {
      out.hypothesis = true;
      BipartitionState st;
      try {
        st = spanning_bipartite(g);
      } catch (const std::logic_error& err) {
        fail(out, std::string("local search invariant failed: ") + err.what());
        break;
      }
      for (int v = 0; v < n; ++v) {
        if (!bipartite_inequality_holds(g, st.in_y, v)) {
          fail(out, "2d_H^c + 3d_H >= d_G^c + d_G fails at vertex " + std::to_string(v));
          break;
        }
      }
      if (out.conclusion != Verdict::True) break;
      for (const BipartiteMove& mv : st.moves) {
        if (mv.f_after <= mv.f_before) {
          fail(out, "potential did not strictly increase when moving vertex " +
                        std::to_string(mv.vertex));
          break;
        }
      }
      if (out.conclusion != Verdict::True) break;
      if (bipartite_potential(g, st.in_y) != st.potential) {
        fail(out, "incremental potential disagrees with recomputation");
        break;
      }
      out.aux0 = static_cast<long long>(st.moves.size());
      break;
    }
    case CheckId::P_DISJ_C4: {
      GraphStats st = stats(g);
      out.hypothesis = n >= 4LL * cfg.k && count_triangles(g) == 0 &&
                       3LL * (st.min_color_degree - 2 * cfg.k + 1) >= n;
      if (!out.hypothesis) break;
      DisjointCyclesResult res = find_disjoint_rainbow_cycles(g, cfg.k, LengthSpec::exact(4));
      out.aux0 = res.outcome != SearchOutcome::Unknown ? 1 : 0;
      if (res.outcome == SearchOutcome::Found) {
        if (!all_disjoint_and_valid(g, res.cycles)) {
          fail(out, "returned 4-cycles failed revalidation");
        }
      } else if (res.outcome == SearchOutcome::AbsentExact) {
        fail(out, "fewer than k vertex-disjoint rainbow 4-cycles (exact search)");
      } else {
        out.conclusion = Verdict::Unknown;
        out.reason = "greedy search found no packing; existence undecided";
      }
      break;
    }
    case CheckId::XF_TRIANGLE_FREE: {
      out.hypothesis = true;
      if (count_triangles(g) != 0) fail(out, "graph contains a triangle");
      break;
    }
  }
  return out;
}

// ---- samplers -------------------------------------------------------------

int pick_n(Rng& rng, const CheckConfig& cfg, int floor_n) {
  int lo = std::max(cfg.n_min, floor_n);
  if (lo > cfg.n_max) lo = cfg.n_max;
  return lo + rng.below_int(cfg.n_max - lo + 1);
}

ColoredGraph random_graph_default(Rng& rng, int n) {
  double p = 0.15 + 0.85 * rng.next_double();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.chance(p)) edges.push_back({u, v, 0});
    }
  }
  if (!edges.empty()) {
    int palette = 1 + rng.below_int(static_cast<int>(edges.size()));
    for (Edge& ed : edges) ed.color = rng.below_int(palette);
  }
  return ColoredGraph::build(n, edges);
}

ColoredGraph rainbow_complete(int n) {
  std::vector<Edge> edges;
  int c = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, c++});
  }
  return ColoredGraph::build(n, edges);
}

ColoredGraph random_complete(Rng& rng, int n, long long palette_floor) {
  long long e = static_cast<long long>(n) * (n - 1) / 2;
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(e));
  long long lo = std::max(1LL, std::min(palette_floor, e));
  long long hi = std::max(lo, e);
  int palette = static_cast<int>(lo + static_cast<long long>(rng.below(hi - lo + 1)));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, rng.below_int(palette)});
  }
  return ColoredGraph::build(n, edges);
}

ColoredGraph merge_random_colors(const ColoredGraph& g, Rng& rng, int merges) {
  std::vector<Edge> edges = g.edge_list();
  if (edges.size() >= 2) {
    for (int m = 0; m < merges; ++m) {
      size_t i = rng.below(edges.size());
      size_t j = rng.below(edges.size());
      edges[i].color = edges[j].color;
    }
  }
  return ColoredGraph::build(g.n(), edges);
}

ColoredGraph recolor_random_edge(const ColoredGraph& g, Rng& rng, int palette) {
  std::vector<Edge> edges = g.edge_list();
  if (!edges.empty()) edges[rng.below(edges.size())].color = rng.below_int(palette);
  return ColoredGraph::build(g.n(), edges);
}

// Dense random bipartition with near-rainbow colors: triangle-free by
// construction, color degrees around half the order.
ColoredGraph triangle_free_sample(Rng& rng, int n) {
  if (n < 2) return ColoredGraph::build(n, {});
  int a = std::clamp(n / 2 + rng.below_int(3) - 1, 1, n - 1);
  double p = 0.85 + 0.15 * rng.next_double();
  std::vector<Edge> edges;
  int c = 0;
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < n; ++v) {
      if (rng.chance(p)) edges.push_back({u, v, c++});
    }
  }
  return merge_random_colors(ColoredGraph::build(n, edges), rng, rng.below_int(3));
}

// Proper edge coloring of K_n by the circle method (one matching per color),
// then random color and vertex relabelings. Every vertex sees n-1 distinct
// colors.
ColoredGraph proper_coloring_kn(Rng& rng, int n) {
  if (n < 2) return ColoredGraph::build(n, {});
  int m = n % 2 == 0 ? n : n + 1;
  std::vector<Edge> edges;
  for (int r = 0; r < m - 1; ++r) {
    auto add = [&](int x, int y) {
      if (x >= n || y >= n) return;  // odd n: one vertex sits this round out
      edges.push_back({std::min(x, y), std::max(x, y), r});
    };
    add(m - 1, r);
    for (int i = 1; i <= m / 2 - 1; ++i) {
      add((r + i) % (m - 1), (r - i + (m - 1)) % (m - 1));
    }
  }
  std::vector<int> cperm(m - 1);
  std::iota(cperm.begin(), cperm.end(), 0);
  rng.shuffle(cperm);
  std::vector<int> vperm(n);
  std::iota(vperm.begin(), vperm.end(), 0);
  rng.shuffle(vperm);
  for (Edge& ed : edges) {
    int u = vperm[ed.u];
    int v = vperm[ed.v];
    ed = {std::min(u, v), std::max(u, v), cperm[ed.color]};
  }
  return ColoredGraph::build(n, edges);
}

// Random substitution construction: a complete graph on p parts with at most
// two cross colors, parts filled recursively the same way. The result is
// complete and rainbow-triangle-free whatever colors are drawn.
ColoredGraph gallai_random(Rng& rng, int n, int palette) {
  if (n <= 1) return ColoredGraph::build(n, {});
  int p = 2 + rng.below_int(std::min(n, 4) - 1);
  std::vector<int> sizes(p, 1);
  for (int rest = n - p; rest > 0; --rest) sizes[rng.below_int(p)]++;
  int ca = rng.below_int(palette);
  int cb = rng.below_int(palette);
  std::vector<int> offset(p + 1, 0);
  for (int i = 0; i < p; ++i) offset[i + 1] = offset[i] + sizes[i];
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i) {
    ColoredGraph part = gallai_random(rng, sizes[i], palette);
    for (const Edge& ed : part.edge_list()) {
      edges.push_back({ed.u + offset[i], ed.v + offset[i], ed.color});
    }
  }
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      int cc = rng.chance(0.5) ? ca : cb;
      for (int u = offset[i]; u < offset[i + 1]; ++u) {
        for (int v = offset[j]; v < offset[j + 1]; ++v) edges.push_back({u, v, cc});
      }
    }
  }
  return ColoredGraph::build(n, edges);
}

ColoredGraph dense_mask_sample(Rng& rng, int n) {
  long long total = static_cast<long long>(n) * (n - 1) / 2;
  long long m_min = std::min(static_cast<long long>(n) * n / 4 + 1, total);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  rng.shuffle(pairs);
  long long e = total == 0 ? 0 : m_min + static_cast<long long>(rng.below(total - m_min + 1));
  std::vector<Edge> edges;
  for (long long i = 0; i < e; ++i) edges.push_back({pairs[i].first, pairs[i].second, 0});
  return ColoredGraph::build(n, edges);
}

ColoredGraph sample_instance(CheckId id, const CheckConfig& cfg, Rng& rng) {
  switch (id) {
    case CheckId::T1: {
      int n = pick_n(rng, cfg, 3);
      if (rng.chance(0.5)) return merge_random_colors(rainbow_complete(n), rng, rng.below_int(3));
      return random_complete(rng, n, n);
    }
    case CheckId::T2: {
      int n = pick_n(rng, cfg, 1);
      ColoredGraph g = gen_from_tree(random_tree(n, 0, rng.next_u64()));
      if (rng.chance(0.5)) g = recolor_random_edge(g, rng, 2 * n + 1);
      return g;
    }
    case CheckId::T3: {
      int n = pick_n(rng, cfg, 3);
      ColoredGraph g = gen_from_tree(random_tree(n, 1, rng.next_u64()));
      if (rng.chance(0.5)) g = recolor_random_edge(g, rng, 2 * n + 1);
      return g;
    }
    case CheckId::T4: {
      int n = pick_n(rng, cfg, 5);
      if (rng.chance(0.7) && n >= 2) {
        return merge_random_colors(gen_rainbow_bipartite((n + 1) / 2, n / 2), rng,
                                   rng.below_int(3));
      }
      return random_graph_default(rng, n);
    }
    case CheckId::T5: {
      int n = pick_n(rng, cfg, 4);
      switch (rng.below_int(3)) {
        case 0:
          return merge_random_colors(rainbow_complete(n), rng, rng.below_int(4));
        case 1:
          return random_complete(rng, n, n - 1);
        default:
          return random_graph_default(rng, n);
      }
    }
    case CheckId::T6:
    case CheckId::T8: {
      int floor_n = id == CheckId::T6 ? 105 * cfg.k - 24 : 3;
      int n = pick_n(rng, cfg, floor_n);
      ColoredGraph g = rng.chance(0.5) || n < 2
                           ? rainbow_complete(n)
                           : gen_rainbow_bipartite((n + 1) / 2, n / 2);
      return merge_random_colors(g, rng, rng.below_int(2));
    }
    case CheckId::T7: {
      int n = pick_n(rng, cfg, 6);
      switch (rng.below_int(3)) {
        case 0:
          return merge_random_colors(rainbow_complete(n), rng, rng.below_int(3));
        case 1:
          return merge_random_colors(gen_rainbow_bipartite((n + 1) / 2, n / 2), rng,
                                     rng.below_int(3));
        default:
          return random_complete(rng, n, n - 1);
      }
    }
    case CheckId::L_SAT: {
      int n = pick_n(rng, cfg, 1);
      switch (rng.below_int(3)) {
        case 0:
          return rainbow_complete(n);
        case 1:
          return n >= 2 ? gen_rainbow_bipartite((n + 1) / 2, n / 2)
                        : ColoredGraph::build(n, {});
        default:
          return random_graph_default(rng, n);
      }
    }
    case CheckId::L_GALLAI_COLORS: {
      int n = pick_n(rng, cfg, 1);
      return gallai_random(rng, n, std::max(2, n));
    }
    case CheckId::L_RADEMACHER:
      return dense_mask_sample(rng, pick_n(rng, cfg, 3));
    case CheckId::L_CKRY:
      return triangle_free_sample(rng, pick_n(rng, cfg, 4));
    case CheckId::L_DISJ_C4:
      return triangle_free_sample(rng, pick_n(rng, cfg, cfg.k + 3));
    case CheckId::P_DISJ_C4:
      return triangle_free_sample(rng, pick_n(rng, cfg, 4 * cfg.k));
    case CheckId::L_FIVE:
      return proper_coloring_kn(rng, pick_n(rng, cfg, 5));
    case CheckId::L_SPABIP:
    case CheckId::XF_TRIANGLE_FREE:
      return random_graph_default(rng, pick_n(rng, cfg, 1));
  }
  throw std::logic_error("unhandled check id in sampler");
}

// ---- drivers --------------------------------------------------------------

struct Shard {
  long long instances = 0;
  long long hypothesis = 0;
  long long violations_total = 0;
  long long unresolved = 0;
  long long aux0 = 0;
  long long aux1 = 0;
  std::vector<Violation> stored;
};

void tally(Shard& s, CheckId id, long long index, const ColoredGraph& g, const Outcome& out) {
  ++s.instances;
  if (!out.hypothesis) return;
  ++s.hypothesis;
  s.aux0 += out.aux0;
  s.aux1 += out.aux1;
  if (out.conclusion == Verdict::Unknown) {
    ++s.unresolved;
  } else if (out.conclusion == Verdict::False) {
    ++s.violations_total;
    if (s.stored.size() < static_cast<size_t>(kViolationStoreCap)) {
      s.stored.push_back({index, serialize_graph(g, GraphFormat::Json),
                          std::string(to_string(id)) + ": " + out.reason});
    }
  }
}

void run_workers(int workers, const std::function<void(int)>& body) {
  if (workers == 1) {
    body(0);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        body(w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& th : threads) th.join();
  for (const std::exception_ptr& err : errors) {
    if (err) std::rethrow_exception(err);
  }
}

// Walks the exhaustive instance stream for [n_min, n_max]; cb fires only for
// instance indices congruent to `w` mod `workers`, so concurrent workers
// partition the stream without coordination.
void for_each_exhaustive(CheckId id, const CheckConfig& cfg, int w, int workers,
                         const std::function<void(long long, const ColoredGraph&)>& cb) {
  Domain dom = domain_of(id);
  long long idx = 0;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    if (dom == Domain::UncoloredMasks) {
      std::vector<std::pair<int, int>> pairs;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
      }
      int m = static_cast<int>(pairs.size());
      uint64_t limit = 1ULL << m;
      std::vector<Edge> edges;
      for (uint64_t mask = 0; mask < limit; ++mask, ++idx) {
        if (idx % workers != w) continue;
        edges.clear();
        for (int b = 0; b < m; ++b) {
          if (mask >> b & 1) edges.push_back({pairs[b].first, pairs[b].second, 0});
        }
        cb(idx, ColoredGraph::build(n, edges));
      }
    } else {
      std::vector<ColoredGraph> unders;
      if (dom == Domain::CompleteColorings) {
        unders.push_back(ColoredGraph::complete_monochromatic(n));
      } else {
        unders = enumerate_graphs(n);
      }
      for (const ColoredGraph& under : unders) {
        EnumSpec spec;
        spec.underlying = under;
        spec.mode = EnumSpec::Mode::Exhaustive;
        ColoringEnumerator en(spec);
        while (std::optional<ColoredGraph> g = en.next()) {
          if (idx % workers == w) cb(idx, *g);
          ++idx;
        }
      }
    }
  }
}

void run_exhaustive(CheckId id, const CheckConfig& cfg, std::vector<Shard>& shards) {
  run_workers(cfg.workers, [&](int w) {
    for_each_exhaustive(id, cfg, w, cfg.workers, [&](long long idx, const ColoredGraph& g) {
      tally(shards[w], id, idx, g, evaluate_instance(id, cfg, g));
    });
  });
}

struct SampleSlot {
  ColoredGraph g;
  Outcome out;
};

// Rejection sampling against the hypothesis. Attempt t is a pure function of
// (seed, t), and the accepted list is the first `samples` hypothesis hits in
// t order, so reports are identical for any worker count.
long long run_sampled(CheckId id, const CheckConfig& cfg, Shard& total, bool& sparse) {
  const long long target = cfg.samples;
  const long long cap = target * guards::kSampleAttemptsPerInstance;
  long long accepted = 0;
  long long t = 0;
  auto attempt = [&](uint64_t stream, SampleSlot& slot) {
    Rng rng = Rng::for_stream(cfg.seed, stream);
    slot.g = sample_instance(id, cfg, rng);
    slot.out = evaluate_instance(id, cfg, slot.g);
  };
  if (cfg.workers == 1) {
    SampleSlot slot;
    while (accepted < target && t < cap) {
      attempt(static_cast<uint64_t>(t), slot);
      ++t;
      if (!slot.out.hypothesis) continue;
      tally(total, id, accepted, slot.g, slot.out);
      ++accepted;
    }
  } else {
    const long long block = 64LL * cfg.workers;
    std::vector<SampleSlot> slots(static_cast<size_t>(block));
    while (accepted < target && t < cap) {
      const long long round = std::min(block, cap - t);
      run_workers(cfg.workers, [&](int w) {
        for (long long i = w; i < round; i += cfg.workers) {
          attempt(static_cast<uint64_t>(t + i), slots[static_cast<size_t>(i)]);
        }
      });
      bool done = false;
      for (long long i = 0; i < round && !done; ++i) {
        const SampleSlot& slot = slots[static_cast<size_t>(i)];
        if (!slot.out.hypothesis) continue;
        tally(total, id, accepted, slot.g, slot.out);
        ++accepted;
        if (accepted == target) {
          t += i + 1;
          done = true;
        }
      }
      if (!done) t += round;
    }
  }
  sparse = accepted < target;
  return t;
}

void validate_config(CheckId id, const CheckConfig& cfg) {
  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min) {
    throw std::invalid_argument("invalid n range [" + std::to_string(cfg.n_min) + ", " +
                                std::to_string(cfg.n_max) + "]");
  }
  if (cfg.workers < 1 || cfg.workers > 256) {
    throw std::invalid_argument("workers must be in [1, 256]");
  }
  if (cfg.k < 1) throw std::invalid_argument("k must be >= 1");
  if (cfg.constant < 1) throw std::invalid_argument("constant must be >= 1");
  if (cfg.mode == CheckMode::Sample && cfg.samples < 0) {
    throw std::invalid_argument("samples must be >= 0");
  }
  if (cfg.mode == CheckMode::Exhaustive) {
    switch (domain_of(id)) {
      case Domain::SampleOnly:
        throw GuardError(std::string(to_string(id)) +
                         ": exhaustive mode is out of reach (the hypothesis is empty at "
                         "enumerable sizes); run sample mode, which draws structured instances");
      case Domain::UncoloredMasks:
        if (cfg.n_max > guards::kExhaustiveUncoloredMaxN) {
          throw GuardError("exhaustive edge-subset scan capped at n <= " +
                           std::to_string(guards::kExhaustiveUncoloredMaxN));
        }
        break;
      case Domain::CompleteColorings:
        if (cfg.n_max > guards::kExhaustiveCompleteMaxN) {
          throw GuardError("exhaustive complete-coloring scan capped at n <= " +
                           std::to_string(guards::kExhaustiveCompleteMaxN));
        }
        break;
      case Domain::AllColorings:
        if (cfg.n_max > guards::kExhaustiveAllGraphsMaxN) {
          throw GuardError("exhaustive coloring scan capped at n <= " +
                           std::to_string(guards::kExhaustiveAllGraphsMaxN));
        }
        break;
    }
  }
}

}  // namespace

const char* to_string(CheckId id) {
  for (const auto& [key, name] : kIdNames) {
    if (key == id) return name;
  }
  return "UNKNOWN";
}

std::optional<CheckId> check_id_from_string(const std::string& name) {
  for (const auto& [key, keyname] : kIdNames) {
    if (name == keyname) return key;
  }
  return std::nullopt;
}

std::vector<CheckId> all_check_ids() {
  std::vector<CheckId> ids;
  for (const auto& [key, name] : kIdNames) ids.push_back(key);
  return ids;
}

CheckReport run_check(CheckId id, const CheckConfig& cfg) {
  validate_config(id, cfg);
  const auto start = std::chrono::steady_clock::now();
  CheckReport rep;
  rep.id = id;
  rep.config = cfg;

  std::vector<Shard> shards;
  long long attempts = 0;
  if (cfg.mode == CheckMode::Exhaustive) {
    shards.resize(static_cast<size_t>(cfg.workers));
    run_exhaustive(id, cfg, shards);
  } else {
    shards.resize(1);
    bool sparse = false;
    attempts = run_sampled(id, cfg, shards[0], sparse);
    rep.hypothesis_sparse = sparse;
  }

  Shard total;
  for (Shard& s : shards) {
    total.instances += s.instances;
    total.hypothesis += s.hypothesis;
    total.violations_total += s.violations_total;
    total.unresolved += s.unresolved;
    total.aux0 += s.aux0;
    total.aux1 += s.aux1;
    total.stored.insert(total.stored.end(), std::make_move_iterator(s.stored.begin()),
                        std::make_move_iterator(s.stored.end()));
  }
  std::sort(total.stored.begin(), total.stored.end(),
            [](const Violation& a, const Violation& b) { return a.index < b.index; });
  if (total.stored.size() > static_cast<size_t>(kViolationStoreCap)) {
    total.stored.resize(static_cast<size_t>(kViolationStoreCap));
  }

  rep.instances = total.instances;
  rep.hypothesis_count = total.hypothesis;
  rep.violations_total = total.violations_total;
  rep.violations = std::move(total.stored);
  rep.unresolved = total.unresolved;

  if (cfg.mode == CheckMode::Sample) {
    rep.notes.push_back({"attempts", std::to_string(attempts)});
    if (id == CheckId::T6 || id == CheckId::T8) {
      rep.notes.push_back({"domain", "structured sample - not a refutation domain"});
    }
  }
  switch (id) {
    case CheckId::T3:
      rep.notes.push_back({"strict_inequality_one_triangle", std::to_string(total.aux0)});
      break;
    case CheckId::T7:
      rep.notes.push_back({"exception_branch", std::to_string(total.aux0)});
      break;
    case CheckId::T8:
      rep.notes.push_back({"exact_decided", std::to_string(total.aux0)});
      rep.notes.push_back({"heuristic_found", std::to_string(total.aux1)});
      break;
    case CheckId::P_DISJ_C4:
      rep.notes.push_back({"exact_decided", std::to_string(total.aux0)});
      break;
    case CheckId::L_GALLAI_COLORS:
      rep.notes.push_back({"decompositions_validated", std::to_string(total.aux0)});
      break;
    case CheckId::L_SPABIP:
      rep.notes.push_back({"moves_total", std::to_string(total.aux0)});
      break;
    default:
      break;
  }
  std::sort(rep.notes.begin(), rep.notes.end());

  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

bool revalidate_violation(CheckId id, const CheckConfig& cfg, const ColoredGraph& g) {
  Outcome out = evaluate_instance(id, cfg, g);
  return out.hypothesis && out.conclusion == Verdict::False;
}

ExtremalReport search_extremal(int n, int k, const std::string& mode, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (mode != "exhaustive" && mode != "witness-only") {
    throw std::invalid_argument("mode must be \"exhaustive\" or \"witness-only\"");
  }
  const auto start = std::chrono::steady_clock::now();
  ExtremalReport rep;
  rep.n = n;
  rep.k = k;
  rep.mode = mode;

  // Constructive lower bound: a generated member with exactly k - 1 rainbow
  // triangles reaches e + c = n(n+1)/2 + (k-1) - 1, so f(k) >= k - 1.
  int nw = std::max({1, n, 3 * (k - 1)});
  ColoredGraph family = gen_from_tree(random_tree(nw, k - 1, seed));
  rep.lower_bound_f = k - 1;
  rep.family_witness_json = serialize_graph(family, GraphFormat::Json);

  if (mode == "exhaustive") {
    if (n > guards::kExhaustiveAllGraphsMaxN) {
      throw GuardError("exhaustive extremal scan capped at n <= " +
                       std::to_string(guards::kExhaustiveAllGraphsMaxN));
    }
    const long long base = static_cast<long long>(n) * (n + 1) / 2;
    long long instances = 0;
    long long best = std::numeric_limits<long long>::min();
    ColoredGraph best_g;
    long long best_rb = 0;
    for (const ColoredGraph& under : enumerate_graphs(n)) {
      EnumSpec spec;
      spec.underlying = under;
      spec.mode = EnumSpec::Mode::Exhaustive;
      ColoringEnumerator en(spec);
      while (std::optional<ColoredGraph> g = en.next()) {
        ++instances;
        long long rb = count_rainbow_triangles(*g);
        if (rb >= k) continue;
        long long score = g->edge_count() + g->color_count();
        if (score > best) {
          best = score;
          best_g = *g;
          best_rb = rb;
        }
      }
    }
    rep.instances = instances;
    rep.empirical_f = best + 1 - base;
    rep.extremal_witness_json = serialize_graph(best_g, GraphFormat::Json);
    rep.witness_e_plus_c = best;
    rep.witness_rainbow_triangles = best_rb;
  }

  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

ColoredGraph minimize_counterexample(const ColoredGraph& g, CheckId id, const CheckConfig& cfg) {
  if (!revalidate_violation(id, cfg, g)) {
    throw std::invalid_argument("input graph does not violate " + std::string(to_string(id)));
  }
  ColoredGraph cur = g;
  bool progress = true;
  while (progress) {
    progress = false;
    if (cur.n() > 1) {
      for (int v = 0; v < cur.n(); ++v) {
        ColoredGraph cand = subgraph(cur, DeleteVertex{v});
        if (revalidate_violation(id, cfg, cand)) {
          cur = std::move(cand);
          progress = true;
          break;
        }
      }
      if (progress) continue;
    }
    std::vector<int> colors = cur.color_set();
    for (size_t i = 0; i < colors.size() && !progress; ++i) {
      for (size_t j = i + 1; j < colors.size() && !progress; ++j) {
        std::vector<Edge> edges = cur.edge_list();
        for (Edge& ed : edges) {
          if (ed.color == colors[j]) ed.color = colors[i];
        }
        ColoredGraph cand = ColoredGraph::build(cur.n(), edges);
        if (revalidate_violation(id, cfg, cand)) {
          cur = std::move(cand);
          progress = true;
        }
      }
    }
  }
  return cur;
}

}  // namespace rainbowlab
