#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "colored_graph.hpp"
#include "rng.hpp"

namespace rainbowlab {

// One representative per isomorphism class of underlying (uncolored) graphs
// on n vertices, built by vertex augmentation with canonical-key dedup.
// Representatives are monochromatic (color 0) and sorted by (edge count, key).
// Guard n <= kEnumerateGraphsMaxN.
std::vector<ColoredGraph> enumerate_graphs(int n);

struct EnumSpec {
  enum class Mode { Exhaustive, Random };
  ColoredGraph underlying;  // only the adjacency is used
  Mode mode = Mode::Exhaustive;
  uint64_t seed = 0;
};

// Streams colorings of a fixed underlying graph. Exhaustive mode walks all
// set partitions of the edge list (restricted-growth strings over the sorted
// edge order, block index = color); guard e <= kColoringEnumMaxEdges.
// Random mode is an endless stream: palette size drawn uniformly from
// {1, ..., e}, then each edge colored uniformly from the palette.
class ColoringEnumerator {
 public:
  explicit ColoringEnumerator(const EnumSpec& spec);

  // Next coloring, or nullopt when the exhaustive walk is done.
  std::optional<ColoredGraph> next();

 private:
  ColoredGraph make_current() const;

  std::vector<Edge> edges_;
  int n_ = 0;
  EnumSpec::Mode mode_ = EnumSpec::Mode::Exhaustive;
  // exhaustive state
  bool exhausted_ = false;
  bool started_ = false;
  std::vector<int> rgs_;
  // random state
  Rng rng_{0};
};

// Underlying graph recolored with colors drawn uniformly from
// {0, ..., palette-1}. palette >= 1.
ColoredGraph random_coloring(const ColoredGraph& underlying, int palette, uint64_t seed);

}  // namespace rainbowlab
