#include "spanning_bipartite.hpp"

#include <algorithm>
#include <stdexcept>

namespace rainbowlab {

std::vector<int> BipartitionState::side_x() const {
  std::vector<int> out;
  for (size_t v = 0; v < in_y.size(); ++v) {
    if (!in_y[v]) out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<int> BipartitionState::side_y() const {
  std::vector<int> out;
  for (size_t v = 0; v < in_y.size(); ++v) {
    if (in_y[v]) out.push_back(static_cast<int>(v));
  }
  return out;
}

int cross_degree(const ColoredGraph& g, const std::vector<char>& in_y, int v) {
  int d = 0;
  for (int w = 0; w < g.n(); ++w) {
    if (in_y[w] != in_y[v] && g.has_edge(v, w)) ++d;
  }
  return d;
}

int cross_color_degree(const ColoredGraph& g, const std::vector<char>& in_y, int v) {
  std::vector<int> cs;
  for (int w = 0; w < g.n(); ++w) {
    if (in_y[w] == in_y[v]) continue;
    int c = g.color_at(v, w);
    if (c != kNoEdge) cs.push_back(c);
  }
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  return static_cast<int>(cs.size());
}

long long bipartite_potential(const ColoredGraph& g, const std::vector<char>& in_y) {
  long long e_cross = 0;
  long long cd_sum = 0;
  for (int v = 0; v < g.n(); ++v) {
    e_cross += cross_degree(g, in_y, v);
    cd_sum += cross_color_degree(g, in_y, v);
  }
  return e_cross / 2 + cd_sum;
}

bool bipartite_inequality_holds(const ColoredGraph& g, const std::vector<char>& in_y, int v) {
  int dh = cross_degree(g, in_y, v);
  int dhc = cross_color_degree(g, in_y, v);
  int dg = g.degree(v);
  int dgc = static_cast<int>(color_neighborhood(g, v).size());
  return 2 * dhc + 3 * dh >= dgc + dg;
}

BipartitionState spanning_bipartite(const ColoredGraph& g,
                                    std::optional<std::vector<char>> seed_sides) {
  int n = g.n();
  BipartitionState state;
  if (seed_sides) {
    if (static_cast<int>(seed_sides->size()) != n) {
      throw std::invalid_argument("seed sides must assign all " + std::to_string(n) + " vertices");
    }
    state.in_y = std::move(*seed_sides);
    for (char& s : state.in_y) s = s ? 1 : 0;
  } else {
    state.in_y.assign(n, 0);
    for (int v = 1; v < n; v += 2) state.in_y[v] = 1;
  }
  state.potential = bipartite_potential(g, state.in_y);
  // f is a positive integer bounded by e(G) + sum d_G^c(v) and strictly
  // increases per move, so this terminates; the cap is a tripwire only.
  long long cap = 1;
  for (int v = 0; v < n; ++v) cap += static_cast<long long>(color_neighborhood(g, v).size());
  cap += g.edge_count() + 1;
  for (long long step = 0; step <= cap; ++step) {
    int violator = -1;
    for (int v = 0; v < n; ++v) {
      if (!bipartite_inequality_holds(g, state.in_y, v)) {
        violator = v;
        break;
      }
    }
    if (violator < 0) return state;
    long long before = state.potential;
    state.in_y[violator] ^= 1;
    state.potential = bipartite_potential(g, state.in_y);
    if (state.potential <= before) {
      throw std::logic_error("potential failed to increase when moving vertex " +
                             std::to_string(violator));
    }
    state.moves.push_back({violator, before, state.potential});
  }
  throw std::logic_error("bipartition local search exceeded its move bound");
}

}  // namespace rainbowlab
