// Naive reference implementations used to cross-check the library. Everything
// here favors obviousness over speed: triple loops, std::set, permutation
// scans. Keep these independent of the algorithms under test.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "colored_graph.hpp"
#include "rainbow.hpp"
#include "rng.hpp"

namespace oracle {

using rainbowlab::ColoredGraph;
using rainbowlab::Edge;

inline long long triangles(const ColoredGraph& g) {
  long long count = 0;
  for (int a = 0; a < g.n(); ++a) {
    for (int b = a + 1; b < g.n(); ++b) {
      for (int c = b + 1; c < g.n(); ++c) {
        if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) ++count;
      }
    }
  }
  return count;
}

inline long long rainbow_triangles(const ColoredGraph& g) {
  long long count = 0;
  for (int a = 0; a < g.n(); ++a) {
    for (int b = a + 1; b < g.n(); ++b) {
      for (int c = b + 1; c < g.n(); ++c) {
        if (!g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(a, c)) continue;
        int x = g.color_at(a, b);
        int y = g.color_at(b, c);
        int z = g.color_at(a, c);
        if (x != y && y != z && x != z) ++count;
      }
    }
  }
  return count;
}

inline std::set<int> color_nbhd(const ColoredGraph& g, int v) {
  std::set<int> out;
  for (int w = 0; w < g.n(); ++w) {
    if (g.has_edge(v, w)) out.insert(g.color_at(v, w));
  }
  return out;
}

inline long long cn_union(const ColoredGraph& g, int u, int v) {
  std::set<int> out = color_nbhd(g, u);
  std::set<int> other = color_nbhd(g, v);
  out.insert(other.begin(), other.end());
  return static_cast<long long>(out.size());
}

inline int saturated_degree(const ColoredGraph& g, int v) {
  std::set<int> all;
  std::set<int> without;
  for (const Edge& e : g.edge_list()) {
    all.insert(e.color);
    if (e.u != v && e.v != v) without.insert(e.color);
  }
  return static_cast<int>(all.size() - without.size());
}

inline long long bell(int n) {
  std::vector<std::vector<long long>> tri(static_cast<size_t>(n) + 1);
  tri[0] = {1};
  for (int i = 1; i <= n; ++i) {
    tri[static_cast<size_t>(i)].push_back(tri[static_cast<size_t>(i) - 1].back());
    for (int j = 0; j < i; ++j) {
      tri[static_cast<size_t>(i)].push_back(tri[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                                            tri[static_cast<size_t>(i) - 1][static_cast<size_t>(j)]);
    }
  }
  return tri[static_cast<size_t>(n)][0];
}

// Every simple cycle as (vertex bitmask, cyclic vertex order), one entry per
// cycle subgraph: minimum vertex first, second vertex smaller than last.
inline void for_each_cycle(const ColoredGraph& g,
                           const std::function<void(const std::vector<int>&)>& cb) {
  const int n = g.n();
  std::vector<int> pool;
  for (int s = 3; s <= n; ++s) {
    std::vector<int> pick(static_cast<size_t>(s));
    std::function<void(int, int)> subsets = [&](int start, int depth) {
      if (depth == s) {
        std::vector<int> rest(pick.begin() + 1, pick.end());
        std::sort(rest.begin(), rest.end());
        do {
          if (rest.front() > rest.back()) continue;
          std::vector<int> cyc;
          cyc.push_back(pick[0]);
          cyc.insert(cyc.end(), rest.begin(), rest.end());
          bool ok = true;
          for (int i = 0; i < s && ok; ++i) {
            ok = g.has_edge(cyc[static_cast<size_t>(i)], cyc[static_cast<size_t>((i + 1) % s)]);
          }
          if (ok) cb(cyc);
        } while (std::next_permutation(rest.begin(), rest.end()));
        return;
      }
      for (int v = start; v < n; ++v) {
        pick[static_cast<size_t>(depth)] = v;
        subsets(v + 1, depth + 1);
      }
    };
    subsets(0, 0);
  }
}

inline bool cycle_is_rainbow(const ColoredGraph& g, const std::vector<int>& cyc) {
  std::set<int> colors;
  int s = static_cast<int>(cyc.size());
  for (int i = 0; i < s; ++i) {
    colors.insert(g.color_at(cyc[static_cast<size_t>(i)], cyc[static_cast<size_t>((i + 1) % s)]));
  }
  return static_cast<int>(colors.size()) == s;
}

inline long long rainbow_c4_count(const ColoredGraph& g) {
  long long count = 0;
  for_each_cycle(g, [&](const std::vector<int>& cyc) {
    if (cyc.size() == 4 && cycle_is_rainbow(g, cyc)) ++count;
  });
  return count;
}

// Exact packing oracle for small graphs: do k pairwise vertex-disjoint
// rainbow cycles matching the length filter exist?
inline bool can_pack_rainbow(const ColoredGraph& g, int k, const rainbowlab::LengthSpec& len) {
  std::vector<uint32_t> masks;
  for_each_cycle(g, [&](const std::vector<int>& cyc) {
    if (!len.admits(static_cast<int>(cyc.size()))) return;
    if (!cycle_is_rainbow(g, cyc)) return;
    uint32_t m = 0;
    for (int v : cyc) m |= 1u << v;
    masks.push_back(m);
  });
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::function<bool(uint32_t, int)> rec = [&](uint32_t used, int need) {
    if (need == 0) return true;
    for (uint32_t m : masks) {
      if ((m & used) == 0 && rec(used | m, need - 1)) return true;
    }
    return false;
  };
  return rec(0, k);
}

// Directed analog over an adjacency matrix: simple directed cycles have
// length >= 2 (no self loops considered).
inline std::vector<uint32_t> directed_cycle_masks(const std::vector<std::vector<char>>& arc) {
  const int n = static_cast<int>(arc.size());
  std::vector<uint32_t> out;
  std::vector<int> path;
  std::vector<char> on(static_cast<size_t>(n), 0);
  std::function<void(int, int)> dfs = [&](int anchor, int v) {
    if (path.size() >= 2 && arc[static_cast<size_t>(v)][static_cast<size_t>(anchor)]) {
      uint32_t m = 0;
      for (int w : path) m |= 1u << w;
      out.push_back(m);
    }
    for (int w = anchor + 1; w < n; ++w) {
      if (on[static_cast<size_t>(w)] || !arc[static_cast<size_t>(v)][static_cast<size_t>(w)]) {
        continue;
      }
      on[static_cast<size_t>(w)] = 1;
      path.push_back(w);
      dfs(anchor, w);
      path.pop_back();
      on[static_cast<size_t>(w)] = 0;
    }
  };
  for (int a = 0; a < n; ++a) {
    on.assign(static_cast<size_t>(n), 0);
    on[static_cast<size_t>(a)] = 1;
    path.assign(1, a);
    dfs(a, a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool can_pack_directed(const std::vector<std::vector<char>>& arc, int k) {
  std::vector<uint32_t> masks = directed_cycle_masks(arc);
  std::function<bool(uint32_t, int)> rec = [&](uint32_t used, int need) {
    if (need == 0) return true;
    for (uint32_t m : masks) {
      if ((m & used) == 0 && rec(used | m, need - 1)) return true;
    }
    return false;
  };
  return rec(0, k);
}

// Shared random instance maker for the property tests.
inline ColoredGraph random_graph(rainbowlab::Rng& rng, int n, double p, int palette) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.chance(p)) edges.push_back({u, v, rng.below_int(palette)});
    }
  }
  return ColoredGraph::build(n, edges);
}

}  // namespace oracle
