#include "rainbow.hpp"

#include <algorithm>
#include <stdexcept>

#include "errors.hpp"
#include "version.hpp"

namespace rainbowlab {

LengthSpec LengthSpec::exact(int l) {
  if (l < 3) throw std::invalid_argument("cycle length must be >= 3");
  return {Kind::Exact, l};
}

LengthSpec LengthSpec::at_most(int l) {
  if (l < 3) throw std::invalid_argument("cycle length must be >= 3");
  return {Kind::AtMost, l};
}

bool LengthSpec::admits(int l) const {
  if (l < 3) return false;
  switch (kind) {
    case Kind::Any:
      return true;
    case Kind::Exact:
      return l == length;
    case Kind::AtMost:
      return l <= length;
  }
  return false;
}

int LengthSpec::max_length(int n) const {
  switch (kind) {
    case Kind::Any:
      return n;
    case Kind::Exact:
      return std::min(n, length);
    case Kind::AtMost:
      return std::min(n, length);
  }
  return n;
}

CycleWitness CycleWitness::from_vertices(const ColoredGraph& g, std::vector<int> vs) {
  int len = static_cast<int>(vs.size());
  if (len < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  for (int v : vs) g.check_vertex(v);
  std::vector<int> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("cycle repeats a vertex");
  }
  for (int i = 0; i < len; ++i) {
    if (!g.has_edge(vs[i], vs[(i + 1) % len])) {
      throw std::invalid_argument("cycle edge (" + std::to_string(vs[i]) + ", " +
                                  std::to_string(vs[(i + 1) % len]) + ") is absent");
    }
  }
  // Rotate the minimum vertex to the front, then fix orientation.
  auto min_it = std::min_element(vs.begin(), vs.end());
  std::rotate(vs.begin(), min_it, vs.end());
  if (vs[1] > vs[len - 1]) {
    std::reverse(vs.begin() + 1, vs.end());
  }
  CycleWitness w;
  w.vertices = std::move(vs);
  w.colors.resize(len);
  for (int i = 0; i < len; ++i) {
    w.colors[i] = g.color_at(w.vertices[i], w.vertices[(i + 1) % len]);
  }
  return w;
}

bool CycleWitness::validate(const ColoredGraph& g) const {
  int len = length();
  if (len < 3) return false;
  if (colors.size() != vertices.size()) return false;
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int v : vertices) {
    if (v < 0 || v >= g.n()) return false;
  }
  for (int i = 0; i < len; ++i) {
    int c = g.color_at(vertices[i], vertices[(i + 1) % len]);
    if (c == kNoEdge || c != colors[i]) return false;
  }
  std::vector<int> cs = colors;
  std::sort(cs.begin(), cs.end());
  if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) return false;
  if (vertices[0] != sorted[0]) return false;
  if (vertices[1] > vertices[len - 1]) return false;
  return true;
}

namespace {

// Dense color index for the used-color scratch table.
struct ColorIndex {
  std::vector<int> sorted;
  int index(int color) const {
    return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), color) -
                            sorted.begin());
  }
};

struct CycleSearch {
  const ColoredGraph& g;
  const std::vector<char>& allowed;
  const LengthSpec& len;
  const std::function<bool(const std::vector<int>&)>& cb;
  ColorIndex colors;
  std::vector<char> used_color;
  std::vector<char> on_path;
  std::vector<int> path;
  int anchor = 0;
  int max_len = 0;
  bool stopped = false;

  CycleSearch(const ColoredGraph& graph, const std::vector<char>& allowed_mask,
              const LengthSpec& length_spec, const std::function<bool(const std::vector<int>&)>& f)
      : g(graph), allowed(allowed_mask), len(length_spec), cb(f) {
    colors.sorted = g.color_set();
    used_color.assign(colors.sorted.size(), 0);
    on_path.assign(g.n(), 0);
  }

  // Extends the path (anchor first, all later vertices > anchor, colors
  // pairwise distinct) and reports closable cycles.
  void dfs(int v) {
    if (stopped) return;
    int depth = static_cast<int>(path.size());
    // Close the cycle back to the anchor. The orientation filter (second
    // vertex below the last) reports each cycle subgraph exactly once, in
    // CycleWitness canonical order.
    if (depth >= 3 && len.admits(depth) && path[1] < path[static_cast<size_t>(depth) - 1]) {
      int close = g.color_at(v, anchor);
      if (close != kNoEdge && !used_color[colors.index(close)]) {
        if (!cb(path)) {
          stopped = true;
          return;
        }
      }
    }
    if (depth == max_len) return;
    for (int w = anchor + 1; w < g.n(); ++w) {
      if (!allowed[w] || on_path[w]) continue;
      int c = g.color_at(v, w);
      if (c == kNoEdge) continue;
      int ci = colors.index(c);
      if (used_color[ci]) continue;
      used_color[ci] = 1;
      on_path[w] = 1;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      on_path[w] = 0;
      used_color[ci] = 0;
      if (stopped) return;
    }
  }
};

}  // namespace

bool enumerate_rainbow_cycles_from(const ColoredGraph& g, int anchor,
                                   const std::vector<char>& allowed, const LengthSpec& len,
                                   const std::function<bool(const std::vector<int>&)>& cb) {
  g.check_vertex(anchor);
  if (!allowed[anchor]) return true;
  CycleSearch search(g, allowed, len, cb);
  search.anchor = anchor;
  search.max_len = len.max_length(g.n());
  if (search.max_len < 3) return true;
  search.on_path[anchor] = 1;
  search.path.push_back(anchor);
  search.dfs(anchor);
  return !search.stopped;
}

std::optional<CycleWitness> find_rainbow_cycle_masked(const ColoredGraph& g, const LengthSpec& len,
                                                      const std::vector<char>& allowed) {
  std::optional<CycleWitness> result;
  for (int anchor = 0; anchor + 2 < g.n() && !result; ++anchor) {
    if (!allowed[anchor]) continue;
    enumerate_rainbow_cycles_from(g, anchor, allowed, len, [&](const std::vector<int>& vs) {
      result = CycleWitness::from_vertices(g, vs);
      return false;
    });
  }
  return result;
}

std::optional<CycleWitness> find_rainbow_cycle(const ColoredGraph& g, const LengthSpec& len) {
  std::vector<char> allowed(g.n(), 1);
  return find_rainbow_cycle_masked(g, len, allowed);
}

long long count_triangles(const ColoredGraph& g) {
  long long count = 0;
  int n = g.n();
  int words = g.words();
  for (int u = 0; u < n; ++u) {
    const uint64_t* ru = g.adjacency_row(u);
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      const uint64_t* rv = g.adjacency_row(v);
      // Common neighbors strictly above v, so each triangle counts once.
      for (int wi = v / 64; wi < words; ++wi) {
        uint64_t both = ru[wi] & rv[wi];
        if (wi == v / 64) {
          int shift = v % 64 + 1;
          both = (shift == 64) ? 0 : (both & (~0ULL << shift));
        }
        count += __builtin_popcountll(both);
      }
    }
  }
  return count;
}

long long count_rainbow_triangles(const ColoredGraph& g) {
  long long count = 0;
  int n = g.n();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int cuv = g.color_at(u, v);
      if (cuv == kNoEdge) continue;
      for (int w = v + 1; w < n; ++w) {
        int cuw = g.color_at(u, w);
        if (cuw == kNoEdge) continue;
        int cvw = g.color_at(v, w);
        if (cvw == kNoEdge) continue;
        if (cuv != cuw && cuv != cvw && cuw != cvw) ++count;
      }
    }
  }
  return count;
}

long long count_rainbow_c4(const ColoredGraph& g, long long limit) {
  long long count = 0;
  int n = g.n();
  // Distinct 4-cycles on {a,b,c,d} correspond to the three pairings of
  // opposite vertices; enumerate each once via the three cyclic orders.
  static const int orders[3][4] = {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}};
  int q[4];
  for (int a = 0; a < n && count < limit; ++a) {
    for (int b = a + 1; b < n && count < limit; ++b) {
      for (int c = b + 1; c < n && count < limit; ++c) {
        for (int d = c + 1; d < n && count < limit; ++d) {
          int verts[4] = {a, b, c, d};
          for (const auto& ord : orders) {
            for (int i = 0; i < 4; ++i) q[i] = verts[ord[i]];
            int c0 = g.color_at(q[0], q[1]);
            if (c0 == kNoEdge) continue;
            int c1 = g.color_at(q[1], q[2]);
            if (c1 == kNoEdge) continue;
            int c2 = g.color_at(q[2], q[3]);
            if (c2 == kNoEdge) continue;
            int c3 = g.color_at(q[3], q[0]);
            if (c3 == kNoEdge) continue;
            if (c0 != c1 && c0 != c2 && c0 != c3 && c1 != c2 && c1 != c3 && c2 != c3) {
              if (++count >= limit) break;
            }
          }
        }
      }
    }
  }
  return count;
}

bool is_gallai(const ColoredGraph& g) {
  return underlying_complete(g) && count_rainbow_triangles(g) == 0;
}

namespace {

// Complete backtracking for disjoint cycle packing: decide vertices in
// ascending order; the smallest undecided vertex is either excluded or the
// anchor (minimum) of one packed cycle.
struct DisjointSearch {
  const ColoredGraph& g;
  const LengthSpec& len;
  std::vector<char> undecided;
  std::vector<CycleWitness> chosen;
  int remaining = 0;

  DisjointSearch(const ColoredGraph& graph, const LengthSpec& length_spec)
      : g(graph), len(length_spec) {
    undecided.assign(g.n(), 1);
    remaining = g.n();
  }

  bool solve(int need) {
    if (need == 0) return true;
    if (remaining < len.min_length() * need) return false;
    int v = -1;
    for (int u = 0; u < g.n(); ++u) {
      if (undecided[u]) {
        v = u;
        break;
      }
    }
    if (v < 0) return false;
    bool found = false;
    enumerate_rainbow_cycles_from(g, v, undecided, len, [&](const std::vector<int>& vs) {
      for (int w : vs) {
        undecided[w] = 0;
        --remaining;
      }
      chosen.push_back(CycleWitness::from_vertices(g, vs));
      if (solve(need - 1)) {
        found = true;
      } else {
        chosen.pop_back();
      }
      for (int w : vs) {
        undecided[w] = 1;
        ++remaining;
      }
      return !found;
    });
    if (found) return true;
    // v in no cycle.
    undecided[v] = 0;
    --remaining;
    found = solve(need);
    undecided[v] = 1;
    ++remaining;
    return found;
  }
};

}  // namespace

DisjointCyclesResult find_disjoint_rainbow_cycles(const ColoredGraph& g, int k,
                                                  const LengthSpec& len) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  DisjointCyclesResult result;
  if (g.n() <= guards::kExactDisjointCyclesMaxN) {
    DisjointSearch search(g, len);
    if (search.solve(k)) {
      result.outcome = SearchOutcome::Found;
      result.cycles = std::move(search.chosen);
    } else {
      result.outcome = SearchOutcome::AbsentExact;
    }
    return result;
  }
  // Best effort beyond the exact guard: strip off greedily found cycles.
  std::vector<char> allowed(g.n(), 1);
  std::vector<CycleWitness> found;
  while (static_cast<int>(found.size()) < k) {
    auto w = find_rainbow_cycle_masked(g, len, allowed);
    if (!w) break;
    for (int v : w->vertices) allowed[v] = 0;
    found.push_back(std::move(*w));
  }
  if (static_cast<int>(found.size()) == k) {
    result.outcome = SearchOutcome::Found;
    result.cycles = std::move(found);
  } else {
    result.outcome = SearchOutcome::Unknown;
  }
  return result;
}

}  // namespace rainbowlab
