#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "colored_graph.hpp"
#include "rainbow.hpp"

namespace rainbowlab {

// Anchor-edge selection around (u, v): S1 are neighbors of u, S2 neighbors of
// v, chosen greedily in ascending vertex order so that all anchor colors
// C(u x), C(v y) and C(u v) are pairwise distinct and S1, S2 are disjoint.
// Greedy maximal, not maximum: no vertex can be added without breaking the
// condition, but a cleverer assignment could sometimes be larger.
struct ReductionContext {
  std::shared_ptr<const ColoredGraph> host;
  int u = 0;
  int v = 0;
  int uv_color = 0;
  std::vector<int> s1;         // ascending
  std::vector<int> s1_colors;  // C(u, s1[i])
  std::vector<int> s2;         // ascending
  std::vector<int> s2_colors;  // C(v, s2[j])
  long long cn_union_uv = 0;   // |CN(u) u CN(v)| in the host, for diagnostics

  long long selected() const { return static_cast<long long>(s1.size() + s2.size()); }
  // Anchor color of a selected vertex.
  int anchor_color(int w) const;
  bool condition_holds() const;
  bool is_maximal() const;
};

ReductionContext build_reduction(std::shared_ptr<const ColoredGraph> host, int u, int v);
ReductionContext build_reduction(const ColoredGraph& host, int u, int v);

// Digraph on S1 u S2 encoding how edges inside the selection interact with
// the anchor colors. An arc points at the endpoint whose anchor color equals
// the edge color; cross edges colored C(uv) contribute nothing. An edge whose
// color matches no permitted value closes a short rainbow cycle through the
// anchors, which is returned instead of a digraph.
struct CycleDigraph {
  int n = 0;
  std::vector<int> vertex_ids;  // digraph index -> host vertex (S1 then S2)
  std::vector<char> side;       // 0 = S1, 1 = S2
  std::vector<std::vector<char>> arc;

  long long arc_count() const;
  int out_degree(int v) const;
  int min_out_degree() const;
};

std::variant<CycleDigraph, CycleWitness> build_cycle_digraph(const ReductionContext& ctx);

struct DirectedCycle {
  std::vector<int> vertices;  // digraph indices, minimum first
};

struct DirectedPackingResult {
  SearchOutcome outcome = SearchOutcome::Unknown;
  std::vector<DirectedCycle> cycles;
};

// k pairwise vertex-disjoint directed cycles. Exact backtracking for
// |V(D)| <= kExactDigraphPackMaxN, greedy beyond (miss = Unknown).
DirectedPackingResult pack_directed_cycles(const CycleDigraph& d, int k);

// Maps directed cycles back to host cycles. Every arc's edge carries the
// anchor color of its head, so the lifted cycles are rainbow; this is
// re-verified and a failure throws (it would be a construction bug).
std::vector<CycleWitness> lift_cycles(const ReductionContext& ctx,
                                      const std::vector<DirectedCycle>& cycles);

struct ReductionStage {
  int anchor_u = 0;
  int anchor_v = 0;
  long long s1 = 0;
  long long s2 = 0;
  long long digraph_vertices = 0;
  long long arcs = 0;
  int min_out_degree = 0;
  long long packing_threshold = 0;  // constant * cycles still needed
  std::string outcome;              // "short_cycle" | "packed" | "no_packing"
};

struct HeuristicTrace {
  long long greedy_cycles = 0;
  long long anchors_tried = 0;
  std::vector<ReductionStage> stages;  // capped
  long long stages_total = 0;
  bool found = false;
};

inline constexpr int kStageTraceCap = 64;

// Pipeline: greedily pack short rainbow cycles (lengths 3..5, shortest
// first); when stuck short of k, walk anchor edges of the remainder through
// build_reduction / build_cycle_digraph / pack_directed_cycles / lift_cycles.
// The constant (64 by default, 18 for the sharper bound) only sizes the
// packing_threshold diagnostic; correctness never depends on it.
std::optional<std::vector<CycleWitness>> find_disjoint_rainbow_cycles_heuristic(
    const ColoredGraph& g, int k, int constant = 64, HeuristicTrace* trace = nullptr);

}  // namespace rainbowlab
