#include "enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "canonical.hpp"
#include "errors.hpp"
#include "version.hpp"

namespace rainbowlab {

std::vector<ColoredGraph> enumerate_graphs(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_graphs needs n >= 1");
  if (n > guards::kEnumerateGraphsMaxN) {
    throw GuardError("enumerate_graphs supports n <= " +
                     std::to_string(guards::kEnumerateGraphsMaxN) + ", got n = " +
                     std::to_string(n));
  }
  std::vector<ColoredGraph> reps = {ColoredGraph::build(1, {})};
  for (int m = 2; m <= n; ++m) {
    // Every m-vertex graph minus its last vertex is isomorphic to some
    // (m-1)-vertex representative, so attaching a new vertex to every subset
    // of every representative covers all classes.
    std::vector<ColoredGraph> next;
    std::unordered_set<std::string> seen;
    for (const ColoredGraph& base : reps) {
      std::vector<Edge> base_edges = base.edge_list();
      for (uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
        std::vector<Edge> edges = base_edges;
        for (int v = 0; v < m - 1; ++v) {
          if (mask & (1u << v)) edges.push_back({v, m - 1, 0});
        }
        ColoredGraph candidate = ColoredGraph::build(m, edges);
        std::string key = canonical_key(candidate);
        if (seen.insert(key).second) next.push_back(std::move(candidate));
      }
    }
    reps = std::move(next);
  }
  std::sort(reps.begin(), reps.end(), [](const ColoredGraph& a, const ColoredGraph& b) {
    if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
    return canonical_key(a) < canonical_key(b);
  });
  return reps;
}

ColoringEnumerator::ColoringEnumerator(const EnumSpec& spec)
    : edges_(spec.underlying.edge_list()),
      n_(spec.underlying.n()),
      mode_(spec.mode),
      rng_(spec.seed) {
  if (mode_ == EnumSpec::Mode::Exhaustive &&
      static_cast<long long>(edges_.size()) > guards::kColoringEnumMaxEdges) {
    throw GuardError("exhaustive coloring enumeration supports e <= " +
                     std::to_string(guards::kColoringEnumMaxEdges) + ", got e = " +
                     std::to_string(edges_.size()));
  }
  rgs_.assign(edges_.size(), 0);
}

ColoredGraph ColoringEnumerator::make_current() const {
  std::vector<Edge> edges = edges_;
  for (size_t i = 0; i < edges.size(); ++i) edges[i].color = rgs_[i];
  return ColoredGraph::build(n_, edges);
}

std::optional<ColoredGraph> ColoringEnumerator::next() {
  if (mode_ == EnumSpec::Mode::Random) {
    std::vector<Edge> edges = edges_;
    int palette = edges.empty() ? 1 : 1 + rng_.below_int(static_cast<int>(edges.size()));
    for (Edge& ed : edges) ed.color = rng_.below_int(palette);
    return ColoredGraph::build(n_, edges);
  }
  if (exhausted_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return make_current();  // all-zero string, including the empty edge list
  }
  // Restricted growth successor: rightmost position that can still grow.
  int m = static_cast<int>(rgs_.size());
  int i = m - 1;
  while (i > 0) {
    int prefix_max = *std::max_element(rgs_.begin(), rgs_.begin() + i);
    if (rgs_[i] <= prefix_max) break;
    --i;
  }
  if (i <= 0) {
    exhausted_ = true;
    return std::nullopt;
  }
  ++rgs_[i];
  std::fill(rgs_.begin() + i + 1, rgs_.end(), 0);
  return make_current();
}

ColoredGraph random_coloring(const ColoredGraph& underlying, int palette, uint64_t seed) {
  if (palette < 1) throw std::invalid_argument("palette must be >= 1");
  Rng rng(seed);
  std::vector<Edge> edges = underlying.edge_list();
  for (Edge& ed : edges) ed.color = rng.below_int(palette);
  return ColoredGraph::build(underlying.n(), edges);
}

}  // namespace rainbowlab
