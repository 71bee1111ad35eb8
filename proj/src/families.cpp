#include "families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "errors.hpp"
#include "rainbow.hpp"
#include "rng.hpp"
#include "version.hpp"

namespace rainbowlab {

TreePtr CompositionTree::k1() {
  auto t = std::make_shared<CompositionTree>();
  t->kind = Kind::LeafK1;
  return t;
}

TreePtr CompositionTree::rainbow_triangle(std::array<int, 3> colors) {
  auto t = std::make_shared<CompositionTree>();
  t->kind = Kind::LeafRainbowTriangle;
  t->triangle_colors = colors;
  return t;
}

TreePtr CompositionTree::join(TreePtr left, TreePtr right, int cut_color) {
  if (!left || !right) throw std::invalid_argument("join needs two subtrees");
  auto t = std::make_shared<CompositionTree>();
  t->kind = Kind::Join;
  t->cut_color = cut_color;
  t->left = std::move(left);
  t->right = std::move(right);
  return t;
}

int CompositionTree::vertex_count() const {
  switch (kind) {
    case Kind::LeafK1:
      return 1;
    case Kind::LeafRainbowTriangle:
      return 3;
    case Kind::Join:
      return left->vertex_count() + right->vertex_count();
  }
  return 0;
}

int CompositionTree::triangle_leaf_count() const {
  switch (kind) {
    case Kind::LeafK1:
      return 0;
    case Kind::LeafRainbowTriangle:
      return 1;
    case Kind::Join:
      return left->triangle_leaf_count() + right->triangle_leaf_count();
  }
  return 0;
}

namespace {

// Emits edges for the subtree occupying vertices [offset, offset + size) and
// records the colors it owns.
void emit_tree(const CompositionTree& t, int offset, std::vector<Edge>& edges,
               std::set<int>& palette) {
  auto claim = [&](int color) {
    if (color < 0) throw std::invalid_argument("malformed tree: negative color");
    if (!palette.insert(color).second) {
      throw std::invalid_argument("malformed tree: color " + std::to_string(color) +
                                  " reused across disjoint palettes");
    }
  };
  switch (t.kind) {
    case CompositionTree::Kind::LeafK1:
      return;
    case CompositionTree::Kind::LeafRainbowTriangle: {
      for (int c : t.triangle_colors) claim(c);
      edges.push_back({offset, offset + 1, t.triangle_colors[0]});
      edges.push_back({offset + 1, offset + 2, t.triangle_colors[1]});
      edges.push_back({offset, offset + 2, t.triangle_colors[2]});
      return;
    }
    case CompositionTree::Kind::Join: {
      claim(t.cut_color);
      int left_size = t.left->vertex_count();
      int right_size = t.right->vertex_count();
      emit_tree(*t.left, offset, edges, palette);
      emit_tree(*t.right, offset + left_size, edges, palette);
      for (int i = 0; i < left_size; ++i) {
        for (int j = 0; j < right_size; ++j) {
          edges.push_back({offset + i, offset + left_size + j, t.cut_color});
        }
      }
      return;
    }
  }
}

}  // namespace

ColoredGraph gen_from_tree(const TreePtr& tree) {
  if (!tree) throw std::invalid_argument("null composition tree");
  std::vector<Edge> edges;
  std::set<int> palette;
  emit_tree(*tree, 0, edges, palette);
  return ColoredGraph::build(tree->vertex_count(), edges);
}

namespace {

TreePtr build_random_tree(int n, int k, Rng& rng, int& next_color) {
  if (n == 1) return CompositionTree::k1();
  if (n == 3 && k == 1) {
    int a = next_color++, b = next_color++, c = next_color++;
    return CompositionTree::rainbow_triangle({a, b, c});
  }
  // Valid splits: n = n1 + n2 and k = k1 + k2 with each side able to host its
  // triangles (ni >= 3 ki, ni >= 1).
  std::vector<std::pair<int, int>> splits;
  for (int n1 = 1; n1 < n; ++n1) {
    int n2 = n - n1;
    for (int k1 = 0; k1 <= k; ++k1) {
      int k2 = k - k1;
      if (n1 >= std::max(1, 3 * k1) && n2 >= std::max(1, 3 * k2)) {
        splits.push_back({n1, k1});
      }
    }
  }
  if (splits.empty()) {
    throw std::logic_error("no valid split for n=" + std::to_string(n) +
                           " k=" + std::to_string(k));
  }
  auto [n1, k1] = splits[rng.below(splits.size())];
  int cut = next_color++;
  TreePtr left = build_random_tree(n1, k1, rng, next_color);
  TreePtr right = build_random_tree(n - n1, k - k1, rng, next_color);
  return CompositionTree::join(std::move(left), std::move(right), cut);
}

}  // namespace

TreePtr random_tree(int n, int k, uint64_t seed) {
  if (n < 1 || k < 0) throw std::invalid_argument("random_tree needs n >= 1 and k >= 0");
  if (n < 3 * k) {
    throw std::invalid_argument("random_tree needs n >= 3k to host " + std::to_string(k) +
                                " triangle leaves");
  }
  Rng rng(seed);
  int next_color = 0;
  return build_random_tree(n, k, rng, next_color);
}

namespace {

// If the class of color c0 is exactly the cross edge set of a spanning
// bipartition, returns the two sides (the side containing vertex 0 first).
std::optional<std::pair<std::vector<int>, std::vector<int>>> spanning_cut_sides(
    const ColoredGraph& g, int c0) {
  int n = g.n();
  // Find one c0 edge to seed the sides.
  int a = -1, b = -1;
  for (int u = 0; u < n && a < 0; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.color_at(u, v) == c0) {
        a = u;
        b = v;
        break;
      }
    }
  }
  if (a < 0) return std::nullopt;
  std::vector<char> with_b(n, 0);  // side of b = vertices joined to a by c0
  for (int v = 0; v < n; ++v) {
    if (g.color_at(a, v) == c0) with_b[v] = 1;
  }
  std::vector<int> side_a, side_b;
  for (int v = 0; v < n; ++v) (with_b[v] ? side_b : side_a).push_back(v);
  // Every cross pair must be c0; c0 must not appear inside either side.
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool cross = with_b[u] != with_b[v];
      bool is_c0 = g.color_at(u, v) == c0;
      if (cross != is_c0) return std::nullopt;
    }
  }
  return std::make_pair(std::move(side_a), std::move(side_b));
}

}  // namespace

std::optional<TreePtr> membership_g0(const ColoredGraph& g) {
  int n = g.n();
  if (n == 1) return CompositionTree::k1();
  if (n < 1) return std::nullopt;
  if (!underlying_complete(g)) return std::nullopt;
  if (g.color_count() != n - 1) return std::nullopt;
  for (int c0 : g.color_set()) {
    auto sides = spanning_cut_sides(g, c0);
    if (!sides) continue;
    auto left = membership_g0(subgraph(g, Induced{sides->first}));
    if (!left) continue;
    auto right = membership_g0(subgraph(g, Induced{sides->second}));
    if (!right) continue;
    return CompositionTree::join(std::move(*left), std::move(*right), c0);
  }
  return std::nullopt;
}

std::optional<TreePtr> membership_g1(const ColoredGraph& g) {
  int n = g.n();
  if (n < 3) return std::nullopt;
  if (!underlying_complete(g)) return std::nullopt;
  if (count_rainbow_triangles(g) != 1) return std::nullopt;
  if (n == 3) {
    return CompositionTree::rainbow_triangle(
        {g.color_at(0, 1), g.color_at(1, 2), g.color_at(0, 2)});
  }
  if (g.color_count() != n) return std::nullopt;
  // Locate the unique rainbow triangle to tell which side must recurse as g1.
  std::array<int, 3> tri{};
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      for (int w = v + 1; w < n; ++w) {
        int cuv = g.color_at(u, v), cuw = g.color_at(u, w), cvw = g.color_at(v, w);
        if (cuv != cuw && cuv != cvw && cuw != cvw) tri = {u, v, w};
      }
    }
  }
  for (int c0 : g.color_set()) {
    auto sides = spanning_cut_sides(g, c0);
    if (!sides) continue;
    // A monochromatic cut cannot split the rainbow triangle, so it sits
    // entirely in one side.
    auto contains = [&](const std::vector<int>& side) {
      return std::binary_search(side.begin(), side.end(), tri[0]);
    };
    const std::vector<int>& g1_side = contains(sides->first) ? sides->first : sides->second;
    const std::vector<int>& g0_side = contains(sides->first) ? sides->second : sides->first;
    auto left = membership_g1(subgraph(g, Induced{g1_side}));
    if (!left) continue;
    auto right = membership_g0(subgraph(g, Induced{g0_side}));
    if (!right) continue;
    return CompositionTree::join(std::move(*left), std::move(*right), c0);
  }
  return std::nullopt;
}

ColoredGraph gen_rainbow_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("gen_rainbow_bipartite needs a, b >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(a) * b);
  int color = 0;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j, color++});
  }
  return ColoredGraph::build(a + b, edges);
}

bool GallaiDecomposition::validate(const ColoredGraph& g) const {
  size_t p = parts.size();
  if (p < 2) return false;
  std::vector<int> owner(g.n(), -1);
  for (size_t i = 0; i < p; ++i) {
    if (parts[i].empty()) return false;
    for (int v : parts[i]) {
      if (v < 0 || v >= g.n() || owner[v] != -1) return false;
      owner[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < g.n(); ++v) {
    if (owner[v] == -1) return false;
  }
  if (pair_colors.size() != p) return false;
  std::set<int> reduced;
  for (size_t i = 0; i < p; ++i) {
    if (pair_colors[i].size() != p) return false;
    for (size_t j = 0; j < p; ++j) {
      if (i == j) {
        if (pair_colors[i][j] != -1) return false;
        continue;
      }
      int expect = pair_colors[i][j];
      if (expect < 0 || pair_colors[j][i] != expect) return false;
      reduced.insert(expect);
      for (int u : parts[i]) {
        for (int v : parts[j]) {
          if (g.color_at(u, v) != expect) return false;
        }
      }
    }
  }
  if (reduced.size() > 2) return false;
  std::vector<int> reduced_sorted(reduced.begin(), reduced.end());
  return reduced_sorted == reduced_colors;
}

namespace {

// Checks one part assignment; fills the decomposition on success.
bool try_partition(const ColoredGraph& g, const std::vector<int>& assign, int p,
                   GallaiDecomposition& out) {
  int n = g.n();
  std::vector<std::vector<int>> pair_colors(p, std::vector<int>(p, -1));
  std::set<int> reduced;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int pu = assign[u], pv = assign[v];
      if (pu == pv) continue;
      int c = g.color_at(u, v);
      int& slot = pair_colors[pu][pv];
      if (slot == -1) {
        slot = c;
        pair_colors[pv][pu] = c;
        reduced.insert(c);
        if (reduced.size() > 2) return false;
      } else if (slot != c) {
        return false;
      }
    }
  }
  out.parts.assign(p, {});
  for (int v = 0; v < n; ++v) out.parts[assign[v]].push_back(v);
  out.pair_colors = std::move(pair_colors);
  out.reduced_colors.assign(reduced.begin(), reduced.end());
  return true;
}

// Enumerates surjective restricted-growth strings with exactly p blocks in
// lexicographic order, stopping at the first valid decomposition.
bool search_partitions(const ColoredGraph& g, std::vector<int>& assign, int pos, int used, int p,
                       GallaiDecomposition& out) {
  int n = g.n();
  if (pos == n) {
    if (used != p) return false;
    return try_partition(g, assign, p, out);
  }
  // Still need (p - used) fresh blocks among the remaining slots.
  int remaining = n - pos;
  int hi = std::min(used, p - 1);  // existing block ids usable here
  for (int b = 0; b <= hi; ++b) {
    bool fresh = (b == used);
    int used_after = used + (fresh ? 1 : 0);
    if (p - used_after > remaining - 1) continue;
    assign[pos] = b;
    if (search_partitions(g, assign, pos + 1, used_after, p, out)) return true;
  }
  return false;
}

}  // namespace

GallaiDecomposition gallai_decompose(const ColoredGraph& g) {
  int n = g.n();
  if (n < 2) throw std::invalid_argument("gallai_decompose needs n >= 2");
  if (n > guards::kGallaiDecomposeMaxN) {
    throw GuardError("gallai_decompose supports n <= " +
                     std::to_string(guards::kGallaiDecomposeMaxN) + ", got n = " +
                     std::to_string(n));
  }
  if (!is_gallai(g)) {
    throw std::invalid_argument("gallai_decompose needs a complete graph with no rainbow triangle");
  }
  for (int p = 2; p <= n; ++p) {
    GallaiDecomposition out;
    std::vector<int> assign(n, 0);
    if (search_partitions(g, assign, 1, 1, p, out)) return out;
  }
  throw std::logic_error("no valid decomposition found for a Gallai coloring");
}

}  // namespace rainbowlab
