#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "colored_graph.hpp"

namespace rainbowlab {

// Cycle length filter. Exact(l) and AtMost(l) need l >= 3; Any admits every
// length from 3 up.
struct LengthSpec {
  enum class Kind { Any, Exact, AtMost };
  Kind kind = Kind::Any;
  int length = 0;

  static LengthSpec any() { return {Kind::Any, 0}; }
  static LengthSpec exact(int l);
  static LengthSpec at_most(int l);

  bool admits(int l) const;
  int min_length() const { return kind == Kind::Exact ? length : 3; }
  int max_length(int n) const;
};

// A cycle given as its vertex sequence (closed implicitly), in canonical form:
// the minimum vertex comes first and the orientation is fixed by making the
// second vertex smaller than the last. colors[i] is the color of the edge
// vertices[i] -- vertices[(i+1) % len].
struct CycleWitness {
  std::vector<int> vertices;
  std::vector<int> colors;

  int length() const { return static_cast<int>(vertices.size()); }

  // Canonicalizes an arbitrary rotation/orientation and fills colors from g.
  // Throws if the sequence is not a cycle of g.
  static CycleWitness from_vertices(const ColoredGraph& g, std::vector<int> vs);

  // Adjacency, color agreement, pairwise-distinct colors, canonical form.
  bool validate(const ColoredGraph& g) const;
};

// First rainbow cycle in deterministic search order (anchor vertices
// ascending, neighbors ascending), or nullopt. The masked variant restricts
// the search to vertices with allowed[v] != 0.
std::optional<CycleWitness> find_rainbow_cycle(const ColoredGraph& g, const LengthSpec& len);
std::optional<CycleWitness> find_rainbow_cycle_masked(const ColoredGraph& g, const LengthSpec& len,
                                                      const std::vector<char>& allowed);

// Enumerates rainbow cycles whose minimum vertex is `anchor`, restricted to
// allowed vertices; each cycle subgraph is visited once, in canonical vertex
// order. The callback returns false to stop early; the function returns false
// when stopped.
bool enumerate_rainbow_cycles_from(const ColoredGraph& g, int anchor,
                                   const std::vector<char>& allowed, const LengthSpec& len,
                                   const std::function<bool(const std::vector<int>&)>& cb);

long long count_triangles(const ColoredGraph& g);
long long count_rainbow_triangles(const ColoredGraph& g);

// Distinct rainbow 4-cycles (as subgraphs), counting stops at limit.
long long count_rainbow_c4(const ColoredGraph& g, long long limit);

// Complete underlying graph with no rainbow triangle.
bool is_gallai(const ColoredGraph& g);

enum class SearchOutcome {
  Found,        // cycles holds k pairwise vertex-disjoint rainbow cycles
  AbsentExact,  // complete search proved none exist
  Unknown       // best-effort search found nothing; no proof either way
};

struct DisjointCyclesResult {
  SearchOutcome outcome = SearchOutcome::Unknown;
  std::vector<CycleWitness> cycles;
};

// k pairwise vertex-disjoint rainbow cycles matching len. Exact (complete
// backtracking) for n <= kExactDisjointCyclesMaxN; greedy beyond that, where
// a miss is reported as Unknown rather than AbsentExact.
DisjointCyclesResult find_disjoint_rainbow_cycles(const ColoredGraph& g, int k,
                                                  const LengthSpec& len);

}  // namespace rainbowlab
