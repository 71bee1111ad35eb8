#pragma once

#include <string>

#include "colored_graph.hpp"

namespace rainbowlab {

// Canonical byte key for an edge-colored graph: two keys are equal iff the
// graphs are isomorphic under a simultaneous vertex permutation and color
// bijection. Computed as the lexicographically smallest serialization of the
// color matrix over all vertex permutations, with colors renamed by first
// occurrence along the serialization order. Branch-and-bound over partial
// permutations; guard n <= kCanonicalKeyMaxN.
std::string canonical_key(const ColoredGraph& g);

}  // namespace rainbowlab
