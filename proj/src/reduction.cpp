#include "reduction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "version.hpp"

namespace rainbowlab {

int ReductionContext::anchor_color(int w) const {
  for (size_t i = 0; i < s1.size(); ++i) {
    if (s1[i] == w) return s1_colors[i];
  }
  for (size_t j = 0; j < s2.size(); ++j) {
    if (s2[j] == w) return s2_colors[j];
  }
  throw std::invalid_argument("vertex " + std::to_string(w) + " is not in the selection");
}

bool ReductionContext::condition_holds() const {
  std::set<int> colors;
  colors.insert(uv_color);
  for (int c : s1_colors) {
    if (!colors.insert(c).second) return false;
  }
  for (int c : s2_colors) {
    if (!colors.insert(c).second) return false;
  }
  std::set<int> verts(s1.begin(), s1.end());
  for (int w : s2) {
    if (verts.count(w)) return false;
  }
  return true;
}

bool ReductionContext::is_maximal() const {
  const ColoredGraph& g = *host;
  std::set<int> colors;
  colors.insert(uv_color);
  colors.insert(s1_colors.begin(), s1_colors.end());
  colors.insert(s2_colors.begin(), s2_colors.end());
  std::set<int> taken(s1.begin(), s1.end());
  taken.insert(s2.begin(), s2.end());
  for (int w = 0; w < g.n(); ++w) {
    if (w == u || w == v || taken.count(w)) continue;
    int cu = g.color_at(u, w);
    if (cu != kNoEdge && !colors.count(cu)) return false;
    int cv = g.color_at(v, w);
    if (cv != kNoEdge && !colors.count(cv)) return false;
  }
  return true;
}

ReductionContext build_reduction(std::shared_ptr<const ColoredGraph> host, int u, int v) {
  const ColoredGraph& g = *host;
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v || !g.has_edge(u, v)) {
    throw std::invalid_argument("anchor (" + std::to_string(u) + ", " + std::to_string(v) +
                                ") must be an edge");
  }
  ReductionContext ctx;
  ctx.host = std::move(host);
  ctx.u = u;
  ctx.v = v;
  ctx.uv_color = g.color_at(u, v);
  ctx.cn_union_uv = cn_union(g, u, v);
  std::set<int> used_colors;
  used_colors.insert(ctx.uv_color);
  for (int w = 0; w < g.n(); ++w) {
    if (w == v) continue;
    int c = g.color_at(u, w);
    if (c == kNoEdge || used_colors.count(c)) continue;
    used_colors.insert(c);
    ctx.s1.push_back(w);
    ctx.s1_colors.push_back(c);
  }
  std::set<int> in_s1(ctx.s1.begin(), ctx.s1.end());
  for (int w = 0; w < g.n(); ++w) {
    if (w == u || in_s1.count(w)) continue;
    int c = g.color_at(v, w);
    if (c == kNoEdge || used_colors.count(c)) continue;
    used_colors.insert(c);
    ctx.s2.push_back(w);
    ctx.s2_colors.push_back(c);
  }
  return ctx;
}

ReductionContext build_reduction(const ColoredGraph& host, int u, int v) {
  return build_reduction(std::make_shared<const ColoredGraph>(host), u, v);
}

long long CycleDigraph::arc_count() const {
  long long total = 0;
  for (const auto& row : arc) total += std::count(row.begin(), row.end(), char(1));
  return total;
}

int CycleDigraph::out_degree(int v) const {
  return static_cast<int>(std::count(arc[v].begin(), arc[v].end(), char(1)));
}

int CycleDigraph::min_out_degree() const {
  int best = 0;
  for (int v = 0; v < n; ++v) {
    int d = out_degree(v);
    if (v == 0 || d < best) best = d;
  }
  return best;
}

std::variant<CycleDigraph, CycleWitness> build_cycle_digraph(const ReductionContext& ctx) {
  const ColoredGraph& g = *ctx.host;
  CycleDigraph d;
  d.n = static_cast<int>(ctx.s1.size() + ctx.s2.size());
  d.vertex_ids.reserve(d.n);
  for (int w : ctx.s1) d.vertex_ids.push_back(w);
  for (int w : ctx.s2) d.vertex_ids.push_back(w);
  d.side.assign(d.n, 0);
  for (size_t j = ctx.s1.size(); j < d.vertex_ids.size(); ++j) d.side[j] = 1;
  d.arc.assign(d.n, std::vector<char>(d.n, 0));
  std::vector<int> anchor(d.n);
  for (int i = 0; i < d.n; ++i) {
    anchor[i] = i < static_cast<int>(ctx.s1.size())
                    ? ctx.s1_colors[i]
                    : ctx.s2_colors[i - ctx.s1.size()];
  }
  for (int i = 0; i < d.n; ++i) {
    for (int j = i + 1; j < d.n; ++j) {
      int c = g.color_at(d.vertex_ids[i], d.vertex_ids[j]);
      if (c == kNoEdge) continue;
      bool cross = d.side[i] != d.side[j];
      if (cross && c == ctx.uv_color) continue;  // permitted, carries no arc
      if (c == anchor[j]) {
        d.arc[i][j] = 1;
      } else if (c == anchor[i]) {
        d.arc[j][i] = 1;
      } else {
        // The edge color matches no permitted value: together with the
        // anchors it closes a short rainbow cycle.
        std::vector<int> cycle;
        if (!cross) {
          cycle = {d.side[i] == 0 ? ctx.u : ctx.v, d.vertex_ids[i], d.vertex_ids[j]};
        } else {
          int x = d.side[i] == 0 ? d.vertex_ids[i] : d.vertex_ids[j];
          int y = d.side[i] == 0 ? d.vertex_ids[j] : d.vertex_ids[i];
          cycle = {ctx.u, x, y, ctx.v};
        }
        CycleWitness w = CycleWitness::from_vertices(g, cycle);
        if (!w.validate(g)) {
          throw std::logic_error("short-cycle escape produced an invalid witness");
        }
        return w;
      }
    }
  }
  for (int i = 0; i < d.n; ++i) {
    for (int j = 0; j < d.n; ++j) {
      if (d.arc[i][j] && d.arc[j][i]) {
        throw std::logic_error("cycle digraph contains a 2-cycle between " + std::to_string(i) +
                               " and " + std::to_string(j));
      }
    }
  }
  return d;
}

namespace {

// Enumerates directed cycles whose minimum vertex is `anchor`, restricted to
// undecided vertices. Callback returns false to stop.
struct DirectedCycleSearch {
  const CycleDigraph& d;
  std::vector<char>& undecided;
  std::vector<char> on_path;
  std::vector<int> path;
  int anchor = 0;
  bool stopped = false;
  const std::function<bool(const std::vector<int>&)>& cb;

  DirectedCycleSearch(const CycleDigraph& dg, std::vector<char>& mask,
                      const std::function<bool(const std::vector<int>&)>& f)
      : d(dg), undecided(mask), cb(f) {
    on_path.assign(d.n, 0);
  }

  void dfs(int v) {
    if (stopped) return;
    if (path.size() >= 2 && d.arc[v][anchor]) {
      if (!cb(path)) {
        stopped = true;
        return;
      }
    }
    for (int w = anchor + 1; w < d.n; ++w) {
      if (!undecided[w] || on_path[w] || !d.arc[v][w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      on_path[w] = 0;
      if (stopped) return;
    }
  }
};

struct DirectedPackSearch {
  const CycleDigraph& d;
  std::vector<char> undecided;
  std::vector<DirectedCycle> chosen;
  int remaining;

  explicit DirectedPackSearch(const CycleDigraph& dg) : d(dg) {
    undecided.assign(d.n, 1);
    remaining = d.n;
  }

  bool solve(int need) {
    if (need == 0) return true;
    if (remaining < 2 * need) return false;
    int v = -1;
    for (int u = 0; u < d.n; ++u) {
      if (undecided[u]) {
        v = u;
        break;
      }
    }
    if (v < 0) return false;
    bool found = false;
    if (undecided[v]) {
      std::function<bool(const std::vector<int>&)> cb = [&](const std::vector<int>& vs) {
        for (int w : vs) {
          undecided[w] = 0;
          --remaining;
        }
        chosen.push_back({vs});
        if (solve(need - 1)) {
          found = true;
        } else {
          chosen.pop_back();
        }
        for (int w : vs) {
          undecided[w] = 1;
          ++remaining;
        }
        return !found;
      };
      DirectedCycleSearch search(d, undecided, cb);
      search.anchor = v;
      search.on_path[v] = 1;
      search.path.push_back(v);
      search.dfs(v);
    }
    if (found) return true;
    undecided[v] = 0;
    --remaining;
    found = solve(need);
    undecided[v] = 1;
    ++remaining;
    return found;
  }
};

}  // namespace

DirectedPackingResult pack_directed_cycles(const CycleDigraph& d, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  DirectedPackingResult result;
  if (d.n <= guards::kExactDigraphPackMaxN) {
    DirectedPackSearch search(d);
    if (search.solve(k)) {
      result.outcome = SearchOutcome::Found;
      result.cycles = std::move(search.chosen);
    } else {
      result.outcome = SearchOutcome::AbsentExact;
    }
    return result;
  }
  // Greedy: repeatedly take the first directed cycle found among unused
  // vertices.
  std::vector<char> unused(d.n, 1);
  std::vector<DirectedCycle> found;
  while (static_cast<int>(found.size()) < k) {
    std::optional<std::vector<int>> got;
    for (int anchor = 0; anchor < d.n && !got; ++anchor) {
      if (!unused[anchor]) continue;
      std::function<bool(const std::vector<int>&)> cb = [&](const std::vector<int>& vs) {
        got = vs;
        return false;
      };
      DirectedCycleSearch search(d, unused, cb);
      search.anchor = anchor;
      search.on_path[anchor] = 1;
      search.path.push_back(anchor);
      search.dfs(anchor);
    }
    if (!got) break;
    for (int w : *got) unused[w] = 0;
    found.push_back({*got});
  }
  if (static_cast<int>(found.size()) == k) {
    result.outcome = SearchOutcome::Found;
    result.cycles = std::move(found);
  } else {
    result.outcome = SearchOutcome::Unknown;
  }
  return result;
}

std::vector<CycleWitness> lift_cycles(const ReductionContext& ctx,
                                      const std::vector<DirectedCycle>& cycles) {
  const ColoredGraph& g = *ctx.host;
  std::vector<char> seen(g.n(), 0);
  std::vector<CycleWitness> out;
  // Reconstruct the anchor-color table (selection order: S1 then S2) to check
  // the arc semantics while lifting.
  for (const DirectedCycle& dc : cycles) {
    if (dc.vertices.size() < 3) {
      throw std::logic_error("directed cycle shorter than 3 cannot lift to a simple cycle");
    }
    std::vector<int> host_cycle;
    host_cycle.reserve(dc.vertices.size());
    for (int idx : dc.vertices) {
      if (idx < 0 || idx >= static_cast<int>(ctx.s1.size() + ctx.s2.size())) {
        throw std::invalid_argument("directed cycle index out of range");
      }
      int host_v = idx < static_cast<int>(ctx.s1.size())
                       ? ctx.s1[idx]
                       : ctx.s2[idx - ctx.s1.size()];
      host_cycle.push_back(host_v);
    }
    int len = static_cast<int>(host_cycle.size());
    for (int i = 0; i < len; ++i) {
      int head = host_cycle[(i + 1) % len];
      int c = g.color_at(host_cycle[i], head);
      if (c == kNoEdge || c != ctx.anchor_color(head)) {
        throw std::logic_error("arc color does not match the head's anchor color");
      }
    }
    CycleWitness w = CycleWitness::from_vertices(g, host_cycle);
    // Independent rainbow re-check; a failure here is a construction bug.
    if (!w.validate(g)) {
      throw std::logic_error("lifted cycle failed rainbow validation");
    }
    for (int v : w.vertices) {
      if (seen[v]) throw std::invalid_argument("directed cycles are not vertex-disjoint");
      seen[v] = 1;
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::optional<std::vector<CycleWitness>> find_disjoint_rainbow_cycles_heuristic(
    const ColoredGraph& g, int k, int constant, HeuristicTrace* trace) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (constant < 1) throw std::invalid_argument("constant must be >= 1");
  std::vector<char> remaining(g.n(), 1);
  std::vector<CycleWitness> found;
  auto record_stage = [&](const ReductionStage& st) {
    if (!trace) return;
    ++trace->stages_total;
    if (static_cast<int>(trace->stages.size()) < kStageTraceCap) trace->stages.push_back(st);
  };
  while (static_cast<int>(found.size()) < k) {
    // Greedy stage: shortest rainbow cycle of length 3..5 first.
    bool progressed = false;
    for (int len = 3; len <= 5 && !progressed; ++len) {
      auto w = find_rainbow_cycle_masked(g, LengthSpec::exact(len), remaining);
      if (w) {
        for (int v : w->vertices) remaining[v] = 0;
        found.push_back(std::move(*w));
        if (trace) ++trace->greedy_cycles;
        progressed = true;
      }
    }
    if (progressed) continue;
    // Reduction stage over anchor edges of the remainder.
    std::vector<int> live;
    for (int v = 0; v < g.n(); ++v) {
      if (remaining[v]) live.push_back(v);
    }
    std::vector<int> to_host;
    auto rest = std::make_shared<const ColoredGraph>(induced_with_map(g, live, &to_host));
    int need = k - static_cast<int>(found.size());
    for (int u = 0; u < rest->n() && !progressed; ++u) {
      for (int v = u + 1; v < rest->n() && !progressed; ++v) {
        if (!rest->has_edge(u, v)) continue;
        if (trace) ++trace->anchors_tried;
        ReductionContext ctx = build_reduction(rest, u, v);
        ReductionStage stage;
        stage.anchor_u = to_host[u];
        stage.anchor_v = to_host[v];
        stage.s1 = static_cast<long long>(ctx.s1.size());
        stage.s2 = static_cast<long long>(ctx.s2.size());
        stage.packing_threshold = static_cast<long long>(constant) * need;
        auto built = build_cycle_digraph(ctx);
        if (auto* witness = std::get_if<CycleWitness>(&built)) {
          std::vector<int> host_verts;
          for (int w : witness->vertices) host_verts.push_back(to_host[w]);
          CycleWitness lifted = CycleWitness::from_vertices(g, host_verts);
          for (int w : lifted.vertices) remaining[w] = 0;
          found.push_back(std::move(lifted));
          stage.outcome = "short_cycle";
          record_stage(stage);
          progressed = true;
          break;
        }
        const CycleDigraph& d = std::get<CycleDigraph>(built);
        stage.digraph_vertices = d.n;
        stage.arcs = d.arc_count();
        stage.min_out_degree = d.min_out_degree();
        DirectedPackingResult packed = pack_directed_cycles(d, need);
        if (packed.outcome == SearchOutcome::Found) {
          std::vector<CycleWitness> lifted = lift_cycles(ctx, packed.cycles);
          for (CycleWitness& w : lifted) {
            std::vector<int> host_verts;
            for (int x : w.vertices) host_verts.push_back(to_host[x]);
            CycleWitness mapped = CycleWitness::from_vertices(g, host_verts);
            for (int x : mapped.vertices) remaining[x] = 0;
            found.push_back(std::move(mapped));
          }
          stage.outcome = "packed";
          record_stage(stage);
          progressed = true;
        } else {
          stage.outcome = "no_packing";
          record_stage(stage);
        }
      }
    }
    if (!progressed) {
      if (trace) trace->found = false;
      return std::nullopt;
    }
  }
  // Final validation: k cycles, pairwise disjoint, each genuinely rainbow.
  std::vector<char> seen(g.n(), 0);
  for (const CycleWitness& w : found) {
    if (!w.validate(g)) throw std::logic_error("heuristic produced an invalid cycle");
    for (int v : w.vertices) {
      if (seen[v]) throw std::logic_error("heuristic produced overlapping cycles");
      seen[v] = 1;
    }
  }
  if (trace) trace->found = true;
  return found;
}

}  // namespace rainbowlab
