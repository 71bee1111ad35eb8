#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "colored_graph.hpp"

namespace rainbowlab {

// Witness for membership in the layered join families. A tree is either a
// single vertex, a rainbow triangle (three distinct colors), or a join of two
// subtrees whose cross edges all carry one cut color. Every cut color and
// triangle color must be distinct across the whole tree; that keeps the
// generated graph at c = n + k - 1 colors for k triangle leaves, and
// e + c = n(n+1)/2 + (k - 1).
struct CompositionTree;
using TreePtr = std::shared_ptr<const CompositionTree>;

struct CompositionTree {
  enum class Kind { LeafK1, LeafRainbowTriangle, Join };
  Kind kind = Kind::LeafK1;
  std::array<int, 3> triangle_colors = {-1, -1, -1};
  int cut_color = -1;
  TreePtr left;
  TreePtr right;

  static TreePtr k1();
  static TreePtr rainbow_triangle(std::array<int, 3> colors);
  static TreePtr join(TreePtr left, TreePtr right, int cut_color);

  int vertex_count() const;
  int triangle_leaf_count() const;
};

// Generated graph: subtree vertex blocks are laid out left-to-right, so the
// top-level join splits the vertex range into a prefix and a suffix. Throws
// on malformed trees (color reuse across the tree, bad leaf colors).
ColoredGraph gen_from_tree(const TreePtr& tree);

// Uniform-ish random tree shape with n vertices and exactly k rainbow
// triangle leaves (needs n >= 3k and n >= 1). Colors are assigned 0, 1, ...
// in traversal order.
TreePtr random_tree(int n, int k, uint64_t seed);

// Recognizers. A witness tree uses the actual colors of g, so
// gen_from_tree(*membership_g0(g)) is isomorphic to g (equal canonical_key).
//
// membership_g0: K1, or a complete graph with c = n - 1 where some color
// class is a spanning complete bipartite cut and both sides recurse.
std::optional<TreePtr> membership_g0(const ColoredGraph& g);
// membership_g1: a rainbow triangle, or a complete graph with c = n and
// exactly one rainbow triangle, split by a cut color into a side that
// recurses as g1 (containing the triangle) and a side in g0.
std::optional<TreePtr> membership_g1(const ColoredGraph& g);

// K_{a,b} with all a*b edges distinctly colored 0 .. a*b-1. Side A is
// vertices 0..a-1, side B the rest.
ColoredGraph gen_rainbow_bipartite(int a, int b);

// Substitution structure of a complete graph with no rainbow triangle:
// at least two parts, every cross pair monochromatic, and the reduced
// complete graph on the parts uses at most two colors in total.
struct GallaiDecomposition {
  std::vector<std::vector<int>> parts;          // each sorted, ordered by minimum
  std::vector<std::vector<int>> pair_colors;    // part x part, -1 on diagonal
  std::vector<int> reduced_colors;              // sorted distinct, size <= 2

  bool validate(const ColoredGraph& g) const;
};

// Minimum-part decomposition, ties broken by the lexicographically smallest
// part-assignment string. Pre: is_gallai(g), 2 <= n <= kGallaiDecomposeMaxN.
GallaiDecomposition gallai_decompose(const ColoredGraph& g);

}  // namespace rainbowlab
