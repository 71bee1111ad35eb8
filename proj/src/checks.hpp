#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colored_graph.hpp"

namespace rainbowlab {

// Each id names one verifiable claim of the form hypothesis => conclusion.
//
//   T1             e + c >= n(n+1)/2 (n >= 3)        => rainbow triangle
//   T2             e + c >= n(n+1)/2 - 1, no rainbow
//                  triangle                           => recognized by membership_g0
//   T3             e + c >= n(n+1)/2, exactly one
//                  rainbow triangle (n >= 3)          => recognized by membership_g1
//   T4             n >= 5, every d^c(v) >= n/2, no
//                  rainbow triangle                   => underlying graph is K_{n/2,n/2}
//   T5             n >= 4, |CN(u) u CN(v)| >= n - 1
//                  for all pairs                      => rainbow C3 or C4
//   T6             n >= 105k - 24, same pair bound    => k rainbow C4's
//   T7             n >= 6, same pair bound            => rainbow C3, or G is a rainbow
//                                                        balanced complete bipartite graph
//   T8             |CN(u) u CN(v)| >= n/2 + Ck + 1
//                  for all pairs (C = constant)       => k vertex-disjoint rainbow cycles
//   L_SAT          always                             => sum of saturated degrees <= 2c,
//                                                        equality iff rainbow
//   L_GALLAI_COLORS complete, no rainbow triangle     => c <= n - 1 and a valid
//                                                        substitution decomposition exists
//   L_RADEMACHER   e >= floor(n^2/4) + 1              => at least floor(n/2) triangles
//   L_CKRY         triangle-free, d^c(v) >= n/3 + 1   => rainbow C4
//   L_DISJ_C4      triangle-free, n >= k + 3,
//                  d^c(v) >= n/3 + k                  => k rainbow C4's
//   L_FIVE         d^c(v) = n - 1 everywhere          => every 5 vertices induce a rainbow C4
//   L_SPABIP       always                             => spanning_bipartite postcondition
//   P_DISJ_C4      triangle-free, n >= 4k,
//                  d^c(v) >= n/3 + 2(k-1) + 1         => k vertex-disjoint rainbow C4's
//   XF_TRIANGLE_FREE  always                          => no triangles (deliberately false;
//                                                        self-test predicate for the
//                                                        violation/minimization machinery)
//
// Fractional thresholds are evaluated in exact integer arithmetic
// (d^c >= n/3 + 1 as 3(d^c - 1) >= n, and so on).
enum class CheckId {
  T1,
  T2,
  T3,
  T4,
  T5,
  T6,
  T7,
  T8,
  L_SAT,
  L_GALLAI_COLORS,
  L_RADEMACHER,
  L_CKRY,
  L_DISJ_C4,
  L_FIVE,
  L_SPABIP,
  P_DISJ_C4,
  XF_TRIANGLE_FREE,
};

const char* to_string(CheckId id);
std::optional<CheckId> check_id_from_string(const std::string& name);
std::vector<CheckId> all_check_ids();

enum class CheckMode { Exhaustive, Sample };

struct CheckConfig {
  int n_min = 3;
  int n_max = 5;
  CheckMode mode = CheckMode::Exhaustive;
  long long samples = 1000;  // sample mode only
  uint64_t seed = 0;
  int k = 1;           // for the k-parameterized checks
  int constant = 64;   // T8 threshold constant (64, or 18 for the sharper bound)
  int workers = 1;
};

struct Violation {
  long long index = 0;  // enumeration/sample position, for reproducibility
  std::string graph_json;
  std::string reason;
};

inline constexpr int kViolationStoreCap = 100;

struct CheckReport {
  CheckId id = CheckId::T1;
  CheckConfig config;
  long long instances = 0;         // enumerated or accepted sample instances
  long long hypothesis_count = 0;  // instances satisfying the hypothesis
  long long violations_total = 0;
  std::vector<Violation> violations;  // first kViolationStoreCap, in order
  long long unresolved = 0;  // hypothesis held but the conclusion could not be
                             // decided either way (heuristic-scale searches)
  bool hypothesis_sparse = false;  // sampling gave up before reaching `samples`
  std::vector<std::pair<std::string, std::string>> notes;  // sorted by key
  long long elapsed_ms = 0;
};

// Runs a check over its instance stream. Exhaustive mode enumerates every
// coloring of every underlying-graph class in [n_min, n_max] (honoring the
// core guards); sample mode draws seeded instances by rejection sampling
// against the hypothesis. Deterministic for a fixed config, including across
// worker counts.
CheckReport run_check(CheckId id, const CheckConfig& config);

// Re-evaluates hypothesis && !conclusion for a recorded violation.
bool revalidate_violation(CheckId id, const CheckConfig& config, const ColoredGraph& g);

struct ExtremalReport {
  int n = 0;
  int k = 1;
  std::string mode;  // "exhaustive" | "witness-only"
  // Exhaustive scan: minimal f such that every coloring with
  // e + c >= n(n+1)/2 + f has at least k rainbow triangles, plus a witness
  // attaining e + c = n(n+1)/2 + f - 1 with fewer than k.
  std::optional<long long> empirical_f;
  std::optional<std::string> extremal_witness_json;
  long long witness_e_plus_c = 0;
  long long witness_rainbow_triangles = 0;
  long long instances = 0;
  // Constructive lower bound f >= k - 1 from a generated family member with
  // exactly k - 1 rainbow triangles.
  long long lower_bound_f = 0;
  std::string family_witness_json;
  long long elapsed_ms = 0;
};

// mode "exhaustive" needs n <= kExhaustiveAllGraphsMaxN and scans every
// coloring; "witness-only" just emits the generated lower-bound witness.
ExtremalReport search_extremal(int n, int k, const std::string& mode, uint64_t seed);

// Greedy shrink of a violating instance: single vertex deletions first, then
// color-class merges, restarting after every successful step. The result
// still violates the check. Throws if g does not violate it.
ColoredGraph minimize_counterexample(const ColoredGraph& g, CheckId id,
                                     const CheckConfig& config = CheckConfig{});

}  // namespace rainbowlab
