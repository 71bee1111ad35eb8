#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rainbowlab {

inline constexpr int kNoEdge = -1;

struct Edge {
  int u = 0;
  int v = 0;
  int color = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Edge-colored undirected simple graph. Immutable after construction. The
// n x n color matrix is the single source of truth: kNoEdge marks non-edges,
// colors are arbitrary non-negative ints. An adjacency bitset per row is kept
// alongside for fast triangle/neighborhood scans.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  // Builds from an edge list. Rejects out-of-range endpoints, loops, negative
  // colors and pairs listed twice with conflicting colors. Listing the same
  // pair twice with the same color is accepted (idempotent).
  static ColoredGraph build(int n, const std::vector<Edge>& edges);

  static ColoredGraph complete_monochromatic(int n, int color = 0);

  int n() const { return n_; }

  int color_at(int u, int v) const {
    assert(u >= 0 && u < n_ && v >= 0 && v < n_);
    return u == v ? kNoEdge : colors_[static_cast<size_t>(u) * n_ + v];
  }
  bool has_edge(int u, int v) const { return color_at(u, v) != kNoEdge; }

  long long edge_count() const { return e_; }

  // Edges with u < v, lexicographically sorted.
  std::vector<Edge> edge_list() const;

  // Sorted distinct colors present in the graph.
  std::vector<int> color_set() const;
  long long color_count() const;

  int degree(int v) const;

  // Adjacency row as 64-bit words, bit w set iff edge (v, w) exists.
  const uint64_t* adjacency_row(int v) const { return adj_.data() + static_cast<size_t>(v) * words_; }
  int words() const { return words_; }

  void check_vertex(int v) const;

 private:
  int n_ = 0;
  int words_ = 0;
  long long e_ = 0;
  std::vector<int> colors_;
  std::vector<uint64_t> adj_;
};

struct GraphStats {
  long long e = 0;
  long long c = 0;
  int min_color_degree = 0;  // 0 when some vertex is isolated (or n == 0)
  std::vector<int> degree;
  std::vector<int> color_degree;
  // Sorted distinct colors seen at each vertex.
  std::vector<std::vector<int>> color_neighborhood;
  std::vector<int> colors;  // sorted distinct colors of the whole graph
};

GraphStats stats(const ColoredGraph& g);

// Sorted distinct colors on edges from v. The scoped variant restricts the
// other endpoint to the given vertex set.
std::vector<int> color_neighborhood(const ColoredGraph& g, int v);
std::vector<int> color_neighborhood(const ColoredGraph& g, int v, const std::vector<int>& scope);

// |CN(u) u CN(v)|.
long long cn_union(const ColoredGraph& g, int u, int v);

// Number of colors that vanish when v is deleted: c(G) - c(G - v).
int saturated_degree(const ColoredGraph& g, int v);
std::vector<int> saturated_degrees(const ColoredGraph& g);

// Subgraph selectors. Induced/Cross/DeleteVertex renumber the surviving
// vertices by ascending original index; DeleteEdge keeps the vertex set.
struct Induced {
  std::vector<int> vertices;
};
struct Cross {
  std::vector<int> side_a;
  std::vector<int> side_b;
};
struct DeleteVertex {
  int v;
};
struct DeleteEdge {
  int u;
  int v;
};
using SubgraphSelector = std::variant<Induced, Cross, DeleteVertex, DeleteEdge>;

ColoredGraph subgraph(const ColoredGraph& g, const SubgraphSelector& sel);

// Induced subgraph plus the map from new index to original vertex id.
ColoredGraph induced_with_map(const ColoredGraph& g, const std::vector<int>& vertices,
                              std::vector<int>* map_out);

bool underlying_complete(const ColoredGraph& g);

// All edge colors pairwise distinct (e == c).
bool is_rainbow(const ColoredGraph& g);

}  // namespace rainbowlab
