#pragma once

#include <optional>
#include <vector>

#include "colored_graph.hpp"

namespace rainbowlab {

struct BipartiteMove {
  int vertex;
  long long f_before;
  long long f_after;
};

// Result of the local search over bipartitions. H is always the full cross
// subgraph of (X, Y); f(H) = e(H) + sum of cross color degrees.
struct BipartitionState {
  std::vector<char> in_y;  // side per vertex, 0 = X, 1 = Y
  long long potential = 0;
  std::vector<BipartiteMove> moves;

  std::vector<int> side_x() const;
  std::vector<int> side_y() const;
};

long long bipartite_potential(const ColoredGraph& g, const std::vector<char>& in_y);

// Cross degree / cross color degree of v under the given sides.
int cross_degree(const ColoredGraph& g, const std::vector<char>& in_y, int v);
int cross_color_degree(const ColoredGraph& g, const std::vector<char>& in_y, int v);

// 2 d_H^c(v) + 3 d_H(v) >= d_G^c(v) + d_G(v), the per-vertex guarantee of the
// extracted subgraph.
bool bipartite_inequality_holds(const ColoredGraph& g, const std::vector<char>& in_y, int v);

// Local search: start from the seed sides (default: even indices in X, odd in
// Y) and repeatedly move the lowest-indexed vertex violating the inequality to
// the other side. Each move strictly increases f, so termination is
// guaranteed; the final state satisfies the inequality at every vertex.
BipartitionState spanning_bipartite(const ColoredGraph& g,
                                    std::optional<std::vector<char>> seed_sides = std::nullopt);

}  // namespace rainbowlab
