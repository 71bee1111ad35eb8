#include "rainbowlab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "canonical.hpp"
#include "checks.hpp"
#include "colored_graph.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "graph_io.hpp"
#include "rainbow.hpp"
#include "reduction.hpp"
#include "spanning_bipartite.hpp"
#include "version.hpp"

namespace rl = rainbowlab;
using ordered_json = nlohmann::ordered_json;

struct rb_graph {
  rl::ColoredGraph g;
};

struct rb_graph_enum {
  std::vector<rl::ColoredGraph> graphs;
  size_t next = 0;
};

struct rb_coloring_enum {
  rl::ColoringEnumerator en;
  explicit rb_coloring_enum(const rl::EnumSpec& spec) : en(spec) {}
};

namespace {

thread_local std::string t_last_error;

rb_status set_error(rb_status st, const std::string& msg) {
  t_last_error = msg;
  return st;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
rb_status guarded(F&& f) {
  t_last_error.clear();
  try {
    return f();
  } catch (const rl::ParseError& e) {
    return set_error(RB_EPARSE, e.what());
  } catch (const rl::GuardError& e) {
    return set_error(RB_EGUARD, e.what());
  } catch (const nlohmann::json::exception& e) {
    return set_error(RB_EPARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(RB_EINVAL, e.what());
  } catch (const std::exception& e) {
    return set_error(RB_EINTERNAL, e.what());
  }
}

rl::GraphFormat parse_format(const char* format, bool for_output) {
  std::string f = format ? format : (for_output ? "json" : "auto");
  if (f == "json") return rl::GraphFormat::Json;
  if (f == "text") return rl::GraphFormat::Text;
  if (f == "auto" && !for_output) return rl::GraphFormat::Auto;
  throw std::invalid_argument("unknown graph format: " + f);
}

rl::LengthSpec parse_length_spec(const char* spec) {
  std::string v = spec ? spec : "any";
  if (v == "any") return rl::LengthSpec::any();
  auto tail_int = [&](size_t prefix) {
    size_t pos = 0;
    int l = std::stoi(v.substr(prefix), &pos);
    if (prefix + pos != v.size()) throw std::invalid_argument("bad length spec: " + v);
    return l;
  };
  if (v.rfind("exact:", 0) == 0) return rl::LengthSpec::exact(tail_int(6));
  if (v.rfind("at-most:", 0) == 0) return rl::LengthSpec::at_most(tail_int(8));
  throw std::invalid_argument("length spec must be \"any\", \"exact:<l>\" or \"at-most:<l>\"");
}

rl::CheckConfig parse_config(const char* config_json) {
  rl::CheckConfig cfg;
  if (!config_json || !*config_json) return cfg;
  ordered_json j;
  try {
    j = ordered_json::parse(config_json);
  } catch (const nlohmann::json::parse_error& e) {
    throw rl::ParseError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw rl::ParseError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "n_min") {
      cfg.n_min = value.get<int>();
    } else if (key == "n_max") {
      cfg.n_max = value.get<int>();
    } else if (key == "mode") {
      std::string m = value.get<std::string>();
      if (m == "exhaustive") {
        cfg.mode = rl::CheckMode::Exhaustive;
      } else if (m == "sample") {
        cfg.mode = rl::CheckMode::Sample;
      } else {
        throw std::invalid_argument("mode must be \"exhaustive\" or \"sample\"");
      }
    } else if (key == "samples") {
      cfg.samples = value.get<long long>();
    } else if (key == "seed") {
      cfg.seed = value.get<uint64_t>();
    } else if (key == "k") {
      cfg.k = value.get<int>();
    } else if (key == "constant") {
      cfg.constant = value.get<int>();
    } else if (key == "workers") {
      cfg.workers = value.get<int>();
    } else {
      throw std::invalid_argument("unknown config field: " + key);
    }
  }
  return cfg;
}

rl::CheckId parse_check_id(const char* check_id) {
  if (!check_id) throw std::invalid_argument("null check id");
  std::optional<rl::CheckId> id = rl::check_id_from_string(check_id);
  if (!id) throw std::invalid_argument(std::string("unknown check id: ") + check_id);
  return *id;
}

std::string to_hex(const std::string& bytes) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) {
    out += digits[b >> 4];
    out += digits[b & 15];
  }
  return out;
}

ordered_json witness_json(const rl::CycleWitness& w) {
  ordered_json j;
  j["vertices"] = w.vertices;
  j["colors"] = w.colors;
  return j;
}

ordered_json witnesses_json(const std::vector<rl::CycleWitness>& ws) {
  ordered_json arr = ordered_json::array();
  for (const rl::CycleWitness& w : ws) arr.push_back(witness_json(w));
  return arr;
}

const rl::ColoredGraph& deref(const rb_graph* g) {
  if (!g) throw std::invalid_argument("null graph handle");
  return g->g;
}

}  // namespace

extern "C" {

const char* rb_version(void) { return rl::kVersion; }

const char* rb_last_error(void) { return t_last_error.c_str(); }

void rb_string_free(char* s) { std::free(s); }

rb_status rb_graph_build(int n, const int* triples, size_t edge_count, rb_graph** out) {
  return guarded([&]() -> rb_status {
    if (!out) return set_error(RB_EINVAL, "null output pointer");
    if (!triples && edge_count > 0) return set_error(RB_EINVAL, "null edge array");
    std::vector<rl::Edge> edges(edge_count);
    for (size_t i = 0; i < edge_count; ++i) {
      edges[i] = {triples[3 * i], triples[3 * i + 1], triples[3 * i + 2]};
    }
    *out = new rb_graph{rl::ColoredGraph::build(n, edges)};
    return RB_OK;
  });
}

rb_status rb_graph_parse(const char* bytes, const char* format, rb_graph** out) {
  return guarded([&]() -> rb_status {
    if (!out) return set_error(RB_EINVAL, "null output pointer");
    if (!bytes) return set_error(RB_EINVAL, "null input bytes");
    *out = new rb_graph{rl::parse_graph(bytes, parse_format(format, false))};
    return RB_OK;
  });
}

rb_status rb_graph_serialize(const rb_graph* g, const char* format, char** out) {
  return guarded([&]() -> rb_status {
    if (!out) return set_error(RB_EINVAL, "null output pointer");
    *out = dup_string(rl::serialize_graph(deref(g), parse_format(format, true)));
    return RB_OK;
  });
}

void rb_graph_free(rb_graph* g) { delete g; }

int rb_graph_n(const rb_graph* g) { return g ? g->g.n() : 0; }

long long rb_graph_edge_count(const rb_graph* g) { return g ? g->g.edge_count() : 0; }

long long rb_graph_color_count(const rb_graph* g) { return g ? g->g.color_count() : 0; }

int rb_graph_color_at(const rb_graph* g, int u, int v) {
  if (!g || u < 0 || u >= g->g.n() || v < 0 || v >= g->g.n()) return -2;
  return g->g.color_at(u, v);
}

rb_status rb_graph_stats_json(const rb_graph* g, char** out) {
  return guarded([&]() -> rb_status {
    if (!out) return set_error(RB_EINVAL, "null output pointer");
    *out = dup_string(rl::stats_to_json(deref(g)));
    return RB_OK;
  });
}

rb_status rb_cn_union(const rb_graph* g, int u, int v, long long* out) {
  return guarded([&]() -> rb_status {
    if (!out) return set_error(RB_EINVAL, "null output pointer");
    const rl::ColoredGraph& gr = deref(g);
    if (u < 0 || u >= gr.n() || v < 0 || v >= gr.n()) {
      return set_error(RB_EINVAL, "vertex out of range");
    }
    *out = rl::cn_union(gr, u, v);
    return RB_OK;
  });
}

rb_status rb_saturated_degree(const rb_graph* g, int v, int* out) {
  return guarded([&]() -> rb_status {
    if (!out) return set_error(RB_EINVAL, "null output pointer");
    const rl::ColoredGraph& gr = deref(g);
    if (v < 0 || v >= gr.n()) return set_error(RB_EINVAL, "vertex out of range");
    *out = rl::saturated_degree(gr, v);
    return RB_OK;
  });
}

rb_status rb_induced_subgraph(const rb_graph* g, const int* vertices, size_t count,
                              rb_graph** out) {
  return guarded([&]() -> rb_status {
    if (!out) return set_error(RB_EINVAL, "null output pointer");
    if (!vertices && count > 0) return set_error(RB_EINVAL, "null vertex array");
    const rl::ColoredGraph& gr = deref(g);
    std::vector<int> vs(vertices, vertices + count);
    std::set<int> seen;
    for (int v : vs) {
      if (v < 0 || v >= gr.n()) return set_error(RB_EINVAL, "vertex out of range");
      if (!seen.insert(v).second) return set_error(RB_EINVAL, "repeated vertex");
    }
    *out = new rb_graph{rl::subgraph(gr, rl::Induced{vs})};
    return RB_OK;
  });
}

rb_status rb_delete_vertex(const rb_graph* g, int v, rb_graph** out) {
  return guarded([&]() -> rb_status {
    if (!out) return set_error(RB_EINVAL, "null output pointer");
    const rl::ColoredGraph& gr = deref(g);
    if (v < 0 || v >= gr.n()) return set_error(RB_EINVAL, "vertex out of range");
    *out = new rb_graph{rl::subgraph(gr, rl::DeleteVertex{v})};
    return RB_OK;
  });
}

rb_status rb_canonical_key_hex(const rb_graph* g, char** out) {
  return guarded([&]() -> rb_status {
    if (!out) return set_error(RB_EINVAL, "null output pointer");
    *out = dup_string(to_hex(rl::canonical_key(deref(g))));
    return RB_OK;
  });
}

rb_status rb_graph_enum_new(int n, rb_graph_enum** out) {
  return guarded([&]() -> rb_status {
    if (!out) return set_error(RB_EINVAL, "null output pointer");
    auto* e = new rb_graph_enum;
    e->graphs = rl::enumerate_graphs(n);
    *out = e;
    return RB_OK;
  });
}

rb_status rb_graph_enum_next(rb_graph_enum* e, rb_graph** out) {
  return guarded([&]() -> rb_status {
    if (!out) return set_error(RB_EINVAL, "null output pointer");
    if (!e) return set_error(RB_EINVAL, "null enumerator handle");
    if (e->next >= e->graphs.size()) return set_error(RB_ENOTFOUND, "enumeration exhausted");
    *out = new rb_graph{e->graphs[e->next++]};
    return RB_OK;
  });
}

void rb_graph_enum_free(rb_graph_enum* e) { delete e; }

rb_status rb_coloring_enum_new(const rb_graph* underlying, int exhaustive, uint64_t seed,
                               rb_coloring_enum** out) {
  return guarded([&]() -> rb_status {
    if (!out) return set_error(RB_EINVAL, "null output pointer");
    rl::EnumSpec spec;
    spec.underlying = deref(underlying);
    spec.mode = exhaustive ? rl::EnumSpec::Mode::Exhaustive : rl::EnumSpec::Mode::Random;
    spec.seed = seed;
    *out = new rb_coloring_enum(spec);
    return RB_OK;
  });
}

rb_status rb_coloring_enum_next(rb_coloring_enum* e, rb_graph** out) {
  return guarded([&]() -> rb_status {
    if (!out) return set_error(RB_EINVAL, "null output pointer");
    if (!e) return set_error(RB_EINVAL, "null enumerator handle");
    std::optional<rl::ColoredGraph> g = e->en.next();
    if (!g) return set_error(RB_ENOTFOUND, "enumeration exhausted");
    *out = new rb_graph{std::move(*g)};
    return RB_OK;
  });
}

void rb_coloring_enum_free(rb_coloring_enum* e) { delete e; }

rb_status rb_random_coloring(const rb_graph* underlying, int palette, uint64_t seed,
                             rb_graph** out) {
  return guarded([&]() -> rb_status {
    if (!out) return set_error(RB_EINVAL, "null output pointer");
    *out = new rb_graph{rl::random_coloring(deref(underlying), palette, seed)};
    return RB_OK;
  });
}

rb_status rb_find_rainbow_cycle(const rb_graph* g, const char* length_spec, char** witness_json_out) {
  return guarded([&]() -> rb_status {
    if (!witness_json_out) return set_error(RB_EINVAL, "null output pointer");
    std::optional<rl::CycleWitness> w =
        rl::find_rainbow_cycle(deref(g), parse_length_spec(length_spec));
    if (!w) return set_error(RB_ENOTFOUND, "no rainbow cycle matches the length spec");
    *witness_json_out = dup_string(witness_json(*w).dump());
    return RB_OK;
  });
}

rb_status rb_count_triangles(const rb_graph* g, long long* out) {
  return guarded([&]() -> rb_status {
    if (!out) return set_error(RB_EINVAL, "null output pointer");
    *out = rl::count_triangles(deref(g));
    return RB_OK;
  });
}

rb_status rb_count_rainbow_triangles(const rb_graph* g, long long* out) {
  return guarded([&]() -> rb_status {
    if (!out) return set_error(RB_EINVAL, "null output pointer");
    *out = rl::count_rainbow_triangles(deref(g));
    return RB_OK;
  });
}

rb_status rb_count_rainbow_c4(const rb_graph* g, long long limit, long long* out) {
  return guarded([&]() -> rb_status {
    if (!out) return set_error(RB_EINVAL, "null output pointer");
    if (limit < 0) return set_error(RB_EINVAL, "limit must be >= 0");
    *out = rl::count_rainbow_c4(deref(g), limit);
    return RB_OK;
  });
}

rb_status rb_find_disjoint_rainbow_cycles(const rb_graph* g, int k, const char* length_spec,
                                          char** result_json) {
  return guarded([&]() -> rb_status {
    if (!result_json) return set_error(RB_EINVAL, "null output pointer");
    if (k < 1) return set_error(RB_EINVAL, "k must be >= 1");
    rl::DisjointCyclesResult res =
        rl::find_disjoint_rainbow_cycles(deref(g), k, parse_length_spec(length_spec));
    ordered_json j;
    switch (res.outcome) {
      case rl::SearchOutcome::Found:
        j["outcome"] = "found";
        break;
      case rl::SearchOutcome::AbsentExact:
        j["outcome"] = "absent";
        break;
      case rl::SearchOutcome::Unknown:
        j["outcome"] = "unknown";
        break;
    }
    j["cycles"] = witnesses_json(res.cycles);
    *result_json = dup_string(j.dump());
    return RB_OK;
  });
}

rb_status rb_gen_family(const char* family, int n, int k, int a, int b, uint64_t seed,
                        rb_graph** out, char** tree_json) {
  return guarded([&]() -> rb_status {
    if (!out) return set_error(RB_EINVAL, "null output pointer");
    std::string fam = family ? family : "";
    rl::TreePtr tree;
    rl::ColoredGraph g;
    if (fam == "g0") {
      tree = rl::random_tree(n, 0, seed);
      g = rl::gen_from_tree(tree);
    } else if (fam == "g1") {
      tree = rl::random_tree(n, 1, seed);
      g = rl::gen_from_tree(tree);
    } else if (fam == "gk") {
      tree = rl::random_tree(n, k, seed);
      g = rl::gen_from_tree(tree);
    } else if (fam == "rainbow-bipartite") {
      g = rl::gen_rainbow_bipartite(a, b);
    } else {
      return set_error(RB_EINVAL, "unknown family: " + fam);
    }
    *out = new rb_graph{std::move(g)};
    if (tree_json) *tree_json = tree ? dup_string(rl::tree_to_json(tree)) : nullptr;
    return RB_OK;
  });
}

rb_status rb_membership_g0(const rb_graph* g, char** tree_json) {
  return guarded([&]() -> rb_status {
    if (!tree_json) return set_error(RB_EINVAL, "null output pointer");
    std::optional<rl::TreePtr> tree = rl::membership_g0(deref(g));
    if (!tree) return set_error(RB_ENOTFOUND, "not a member of the zero-triangle family");
    *tree_json = dup_string(rl::tree_to_json(*tree));
    return RB_OK;
  });
}

rb_status rb_membership_g1(const rb_graph* g, char** tree_json) {
  return guarded([&]() -> rb_status {
    if (!tree_json) return set_error(RB_EINVAL, "null output pointer");
    std::optional<rl::TreePtr> tree = rl::membership_g1(deref(g));
    if (!tree) return set_error(RB_ENOTFOUND, "not a member of the one-triangle family");
    *tree_json = dup_string(rl::tree_to_json(*tree));
    return RB_OK;
  });
}

rb_status rb_gen_from_tree_json(const char* tree_json, rb_graph** out) {
  return guarded([&]() -> rb_status {
    if (!out) return set_error(RB_EINVAL, "null output pointer");
    if (!tree_json) return set_error(RB_EINVAL, "null tree json");
    *out = new rb_graph{rl::gen_from_tree(rl::tree_from_json(tree_json))};
    return RB_OK;
  });
}

rb_status rb_is_gallai(const rb_graph* g, int* out) {
  return guarded([&]() -> rb_status {
    if (!out) return set_error(RB_EINVAL, "null output pointer");
    *out = rl::is_gallai(deref(g)) ? 1 : 0;
    return RB_OK;
  });
}

rb_status rb_gallai_decompose(const rb_graph* g, char** decomposition_json) {
  return guarded([&]() -> rb_status {
    if (!decomposition_json) return set_error(RB_EINVAL, "null output pointer");
    const rl::ColoredGraph& gr = deref(g);
    if (!rl::is_gallai(gr)) {
      return set_error(RB_EINVAL, "not a Gallai coloring (incomplete or has a rainbow triangle)");
    }
    *decomposition_json = dup_string(rl::decomposition_to_json(rl::gallai_decompose(gr)));
    return RB_OK;
  });
}

rb_status rb_spanning_bipartite(const rb_graph* g, char** result_json) {
  return guarded([&]() -> rb_status {
    if (!result_json) return set_error(RB_EINVAL, "null output pointer");
    const rl::ColoredGraph& gr = deref(g);
    rl::BipartitionState st = rl::spanning_bipartite(gr);
    *result_json = dup_string(rl::bipartition_to_json(gr, st));
    return RB_OK;
  });
}

rb_status rb_reduce(const rb_graph* g, int k, int constant, char** result_json) {
  return guarded([&]() -> rb_status {
    if (!result_json) return set_error(RB_EINVAL, "null output pointer");
    if (k < 1) return set_error(RB_EINVAL, "k must be >= 1");
    if (constant < 1) return set_error(RB_EINVAL, "constant must be >= 1");
    const rl::ColoredGraph& gr = deref(g);
    rl::HeuristicTrace trace;
    std::optional<std::vector<rl::CycleWitness>> cycles =
        rl::find_disjoint_rainbow_cycles_heuristic(gr, k, constant, &trace);
    ordered_json j;
    j["found"] = cycles.has_value();
    j["k"] = k;
    j["constant"] = constant;
    j["cycles"] = cycles ? witnesses_json(*cycles) : ordered_json::array();
    j["trace"] = ordered_json::parse(rl::trace_to_json(trace));
    *result_json = dup_string(j.dump());
    return RB_OK;
  });
}

rb_status rb_check_ids(char** json_array) {
  return guarded([&]() -> rb_status {
    if (!json_array) return set_error(RB_EINVAL, "null output pointer");
    ordered_json arr = ordered_json::array();
    for (rl::CheckId id : rl::all_check_ids()) arr.push_back(rl::to_string(id));
    *json_array = dup_string(arr.dump());
    return RB_OK;
  });
}

rb_status rb_run_check(const char* check_id, const char* config_json, const char* format,
                       char** report, long long* violations_total) {
  return guarded([&]() -> rb_status {
    if (!report) return set_error(RB_EINVAL, "null output pointer");
    rl::CheckId id = parse_check_id(check_id);
    rl::CheckConfig cfg = parse_config(config_json);
    std::string fmt = format ? format : "json";
    if (fmt != "json" && fmt != "text") {
      return set_error(RB_EINVAL, "format must be \"json\" or \"text\"");
    }
    rl::CheckReport rep = rl::run_check(id, cfg);
    *report = dup_string(fmt == "json" ? rl::report_to_json(rep) : rl::report_to_text(rep));
    if (violations_total) *violations_total = rep.violations_total;
    return RB_OK;
  });
}

rb_status rb_search_extremal(int n, int k, const char* mode, uint64_t seed, const char* format,
                             char** report) {
  return guarded([&]() -> rb_status {
    if (!report) return set_error(RB_EINVAL, "null output pointer");
    if (!mode) return set_error(RB_EINVAL, "null mode");
    std::string fmt = format ? format : "json";
    if (fmt != "json" && fmt != "text") {
      return set_error(RB_EINVAL, "format must be \"json\" or \"text\"");
    }
    rl::ExtremalReport rep = rl::search_extremal(n, k, mode, seed);
    *report = dup_string(fmt == "json" ? rl::extremal_to_json(rep) : rl::extremal_to_text(rep));
    return RB_OK;
  });
}

rb_status rb_minimize(const rb_graph* g, const char* check_id, const char* config_json,
                      rb_graph** out) {
  return guarded([&]() -> rb_status {
    if (!out) return set_error(RB_EINVAL, "null output pointer");
    rl::CheckId id = parse_check_id(check_id);
    rl::CheckConfig cfg = parse_config(config_json);
    *out = new rb_graph{rl::minimize_counterexample(deref(g), id, cfg)};
    return RB_OK;
  });
}

}  // extern "C"
