#include "colored_graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace rainbowlab {

void ColoredGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(n_) + ")");
  }
}

ColoredGraph ColoredGraph::build(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  ColoredGraph g;
  g.n_ = n;
  g.words_ = (n + 63) / 64;
  g.colors_.assign(static_cast<size_t>(n) * n, kNoEdge);
  g.adj_.assign(static_cast<size_t>(n) * g.words_, 0);
  for (size_t i = 0; i < edges.size(); ++i) {
    const Edge& ed = edges[i];
    auto where = [&] { return "edges[" + std::to_string(i) + "]: "; };
    if (ed.u < 0 || ed.u >= n || ed.v < 0 || ed.v >= n) {
      throw std::invalid_argument(where() + "vertex out of range (" + std::to_string(ed.u) + ", " +
                                  std::to_string(ed.v) + ") with n=" + std::to_string(n));
    }
    if (ed.u == ed.v) {
      throw std::invalid_argument(where() + "loop edge (" + std::to_string(ed.u) + ", " +
                                  std::to_string(ed.v) + ")");
    }
    if (ed.color < 0) {
      throw std::invalid_argument(where() + "negative color " + std::to_string(ed.color));
    }
    int prev = g.colors_[static_cast<size_t>(ed.u) * n + ed.v];
    if (prev != kNoEdge) {
      if (prev != ed.color) {
        throw std::invalid_argument(where() + "duplicate pair (" + std::to_string(ed.u) + ", " +
                                    std::to_string(ed.v) + ") with conflicting colors " +
                                    std::to_string(prev) + " and " + std::to_string(ed.color));
      }
      continue;
    }
    g.colors_[static_cast<size_t>(ed.u) * n + ed.v] = ed.color;
    g.colors_[static_cast<size_t>(ed.v) * n + ed.u] = ed.color;
    g.adj_[static_cast<size_t>(ed.u) * g.words_ + ed.v / 64] |= 1ULL << (ed.v % 64);
    g.adj_[static_cast<size_t>(ed.v) * g.words_ + ed.u / 64] |= 1ULL << (ed.u % 64);
    ++g.e_;
  }
  return g;
}

ColoredGraph ColoredGraph::complete_monochromatic(int n, int color) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, color});
  }
  return build(n, edges);
}

std::vector<Edge> ColoredGraph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(e_));
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      int c = color_at(u, v);
      if (c != kNoEdge) out.push_back({u, v, c});
    }
  }
  return out;
}

std::vector<int> ColoredGraph::color_set() const {
  std::set<int> s;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      int c = color_at(u, v);
      if (c != kNoEdge) s.insert(c);
    }
  }
  return std::vector<int>(s.begin(), s.end());
}

long long ColoredGraph::color_count() const { return static_cast<long long>(color_set().size()); }

int ColoredGraph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  const uint64_t* row = adjacency_row(v);
  for (int w = 0; w < words_; ++w) d += __builtin_popcountll(row[w]);
  return d;
}

GraphStats stats(const ColoredGraph& g) {
  GraphStats s;
  int n = g.n();
  s.degree.assign(n, 0);
  s.color_degree.assign(n, 0);
  s.color_neighborhood.assign(n, {});
  std::set<int> all;
  for (int v = 0; v < n; ++v) {
    std::vector<int> cn;
    for (int w = 0; w < n; ++w) {
      int c = g.color_at(v, w);
      if (c == kNoEdge) continue;
      ++s.degree[v];
      cn.push_back(c);
      if (v < w) {
        ++s.e;
        all.insert(c);
      }
    }
    std::sort(cn.begin(), cn.end());
    cn.erase(std::unique(cn.begin(), cn.end()), cn.end());
    s.color_degree[v] = static_cast<int>(cn.size());
    s.color_neighborhood[v] = std::move(cn);
  }
  s.c = static_cast<long long>(all.size());
  s.colors.assign(all.begin(), all.end());
  s.min_color_degree = 0;
  for (int v = 0; v < n; ++v) {
    if (v == 0 || s.color_degree[v] < s.min_color_degree) s.min_color_degree = s.color_degree[v];
  }
  return s;
}

std::vector<int> color_neighborhood(const ColoredGraph& g, int v) {
  g.check_vertex(v);
  std::vector<int> cn;
  for (int w = 0; w < g.n(); ++w) {
    int c = g.color_at(v, w);
    if (c != kNoEdge) cn.push_back(c);
  }
  std::sort(cn.begin(), cn.end());
  cn.erase(std::unique(cn.begin(), cn.end()), cn.end());
  return cn;
}

std::vector<int> color_neighborhood(const ColoredGraph& g, int v, const std::vector<int>& scope) {
  g.check_vertex(v);
  std::vector<int> cn;
  for (int w : scope) {
    g.check_vertex(w);
    if (w == v) continue;
    int c = g.color_at(v, w);
    if (c != kNoEdge) cn.push_back(c);
  }
  std::sort(cn.begin(), cn.end());
  cn.erase(std::unique(cn.begin(), cn.end()), cn.end());
  return cn;
}

long long cn_union(const ColoredGraph& g, int u, int v) {
  std::vector<int> a = color_neighborhood(g, u);
  std::vector<int> b = color_neighborhood(g, v);
  std::vector<int> merged;
  merged.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
  return static_cast<long long>(merged.size());
}

std::vector<int> saturated_degrees(const ColoredGraph& g) {
  // A color vanishes with v exactly when every edge of its class touches v,
  // i.e. v lies in the intersection of the class's endpoint pairs. That
  // intersection has at most two vertices, so one pass over the edges does it.
  int n = g.n();
  std::vector<int> out(n, 0);
  std::unordered_map<int, std::pair<int, int>> common;  // color -> surviving endpoints
  for (const Edge& ed : g.edge_list()) {
    auto [it, fresh] = common.try_emplace(ed.color, ed.u, ed.v);
    if (fresh) continue;
    auto& [a, b] = it->second;
    int na = -1, nb = -1;
    if (a == ed.u || a == ed.v) na = a;
    if (b == ed.u || b == ed.v) (na == -1 ? na : nb) = b;
    a = na;
    b = nb;
  }
  for (const auto& [color, pair] : common) {
    if (pair.first >= 0) ++out[pair.first];
    if (pair.second >= 0) ++out[pair.second];
  }
  return out;
}

int saturated_degree(const ColoredGraph& g, int v) {
  g.check_vertex(v);
  return saturated_degrees(g)[v];
}

namespace {

std::vector<int> normalize_vertex_set(const ColoredGraph& g, std::vector<int> vs) {
  for (int v : vs) g.check_vertex(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

}  // namespace

ColoredGraph induced_with_map(const ColoredGraph& g, const std::vector<int>& vertices,
                              std::vector<int>* map_out) {
  std::vector<int> vs = normalize_vertex_set(g, vertices);
  std::vector<Edge> edges;
  for (size_t i = 0; i < vs.size(); ++i) {
    for (size_t j = i + 1; j < vs.size(); ++j) {
      int c = g.color_at(vs[i], vs[j]);
      if (c != kNoEdge) edges.push_back({static_cast<int>(i), static_cast<int>(j), c});
    }
  }
  if (map_out) *map_out = vs;
  return ColoredGraph::build(static_cast<int>(vs.size()), edges);
}

ColoredGraph subgraph(const ColoredGraph& g, const SubgraphSelector& sel) {
  if (const auto* ind = std::get_if<Induced>(&sel)) {
    return induced_with_map(g, ind->vertices, nullptr);
  }
  if (const auto* cross = std::get_if<Cross>(&sel)) {
    std::vector<int> a = normalize_vertex_set(g, cross->side_a);
    std::vector<int> b = normalize_vertex_set(g, cross->side_b);
    std::vector<int> inter;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    if (!inter.empty()) {
      throw std::invalid_argument("cross selector sides overlap at vertex " +
                                  std::to_string(inter[0]));
    }
    std::vector<int> all;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(all));
    std::vector<char> in_a(g.n(), 0);
    for (int v : a) in_a[v] = 1;
    std::vector<Edge> edges;
    for (size_t i = 0; i < all.size(); ++i) {
      for (size_t j = i + 1; j < all.size(); ++j) {
        if (in_a[all[i]] == in_a[all[j]]) continue;
        int c = g.color_at(all[i], all[j]);
        if (c != kNoEdge) edges.push_back({static_cast<int>(i), static_cast<int>(j), c});
      }
    }
    return ColoredGraph::build(static_cast<int>(all.size()), edges);
  }
  if (const auto* del = std::get_if<DeleteVertex>(&sel)) {
    g.check_vertex(del->v);
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v) {
      if (v != del->v) keep.push_back(v);
    }
    return induced_with_map(g, keep, nullptr);
  }
  const auto& de = std::get<DeleteEdge>(sel);
  g.check_vertex(de.u);
  g.check_vertex(de.v);
  if (!g.has_edge(de.u, de.v)) {
    throw std::invalid_argument("cannot delete absent edge (" + std::to_string(de.u) + ", " +
                                std::to_string(de.v) + ")");
  }
  std::vector<Edge> edges;
  for (const Edge& ed : g.edge_list()) {
    if ((ed.u == std::min(de.u, de.v)) && (ed.v == std::max(de.u, de.v))) continue;
    edges.push_back(ed);
  }
  return ColoredGraph::build(g.n(), edges);
}

bool underlying_complete(const ColoredGraph& g) {
  return g.edge_count() == static_cast<long long>(g.n()) * (g.n() - 1) / 2;
}

bool is_rainbow(const ColoredGraph& g) { return g.edge_count() == g.color_count(); }

}  // namespace rainbowlab
