#include "graph_io.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

#include "errors.hpp"
#include "rainbow.hpp"
#include "version.hpp"

namespace rainbowlab {

using ordered_json = nlohmann::ordered_json;

namespace {

GraphFormat sniff(std::string_view bytes, GraphFormat format) {
  if (format != GraphFormat::Auto) return format;
  for (char ch : bytes) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    return ch == '{' ? GraphFormat::Json : GraphFormat::Text;
  }
  throw ParseError("empty graph input");
}

int require_int(const ordered_json& node, const char* where) {
  if (!node.is_number_integer()) {
    throw ParseError(std::string(where) + ": expected an integer");
  }
  return node.get<int>();
}

ColoredGraph parse_graph_json(std::string_view bytes) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(bytes);
  } catch (const ordered_json::parse_error& err) {
    throw ParseError(std::string("invalid json: ") + err.what());
  }
  if (!doc.is_object()) throw ParseError("graph json must be an object");
  for (const auto& item : doc.items()) {
    if (item.key() != "n" && item.key() != "edges") {
      throw ParseError("unknown graph field \"" + item.key() + "\"");
    }
  }
  if (!doc.contains("n")) throw ParseError("missing field \"n\"");
  if (!doc.contains("edges")) throw ParseError("missing field \"edges\"");
  int n = require_int(doc["n"], "n");
  const ordered_json& arr = doc["edges"];
  if (!arr.is_array()) throw ParseError("edges: expected an array");
  std::vector<Edge> edges;
  edges.reserve(arr.size());
  for (size_t i = 0; i < arr.size(); ++i) {
    const ordered_json& triple = arr[i];
    std::string at = "edges[" + std::to_string(i) + "]";
    if (!triple.is_array() || triple.size() != 3) {
      throw ParseError(at + ": expected [u, v, color]");
    }
    edges.push_back({require_int(triple[0], at.c_str()), require_int(triple[1], at.c_str()),
                     require_int(triple[2], at.c_str())});
  }
  try {
    return ColoredGraph::build(n, edges);
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what());
  }
}

ColoredGraph parse_graph_text(std::string_view bytes) {
  std::istringstream in{std::string(bytes)};
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;  // blank line
    std::string at = "line " + std::to_string(lineno) + ": ";
    if (n < 0) {
      int count = 0;
      if (first != "n" || !(fields >> count)) {
        throw ParseError(at + "expected header \"n <count>\"");
      }
      std::string extra;
      if (fields >> extra) throw ParseError(at + "trailing token \"" + extra + "\"");
      if (count < 0) throw ParseError(at + "vertex count must be non-negative");
      n = count;
      continue;
    }
    Edge ed;
    std::istringstream refields(line);
    std::string extra;
    if (!(refields >> ed.u >> ed.v >> ed.color)) {
      throw ParseError(at + "expected \"u v color\"");
    }
    if (refields >> extra) throw ParseError(at + "trailing token \"" + extra + "\"");
    edges.push_back(ed);
  }
  if (n < 0) throw ParseError("missing header \"n <count>\"");
  try {
    return ColoredGraph::build(n, edges);
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what());
  }
}

ordered_json graph_json(const ColoredGraph& g) {
  ordered_json doc;
  doc["n"] = g.n();
  ordered_json arr = ordered_json::array();
  for (const Edge& ed : g.edge_list()) arr.push_back({ed.u, ed.v, ed.color});
  doc["edges"] = std::move(arr);
  return doc;
}

ordered_json guards_json() {
  ordered_json doc;
  doc["enumerate_graphs_max_n"] = guards::kEnumerateGraphsMaxN;
  doc["exhaustive_all_graphs_max_n"] = guards::kExhaustiveAllGraphsMaxN;
  doc["exhaustive_complete_max_n"] = guards::kExhaustiveCompleteMaxN;
  doc["exhaustive_uncolored_max_n"] = guards::kExhaustiveUncoloredMaxN;
  doc["coloring_enum_max_edges"] = guards::kColoringEnumMaxEdges;
  doc["canonical_key_max_n"] = guards::kCanonicalKeyMaxN;
  doc["exact_disjoint_cycles_max_n"] = guards::kExactDisjointCyclesMaxN;
  doc["exact_digraph_pack_max_n"] = guards::kExactDigraphPackMaxN;
  doc["gallai_decompose_max_n"] = guards::kGallaiDecomposeMaxN;
  doc["sample_attempts_per_instance"] = guards::kSampleAttemptsPerInstance;
  return doc;
}

ordered_json config_json(const CheckConfig& cfg) {
  ordered_json doc;
  doc["n_min"] = cfg.n_min;
  doc["n_max"] = cfg.n_max;
  doc["mode"] = to_string(cfg.mode);
  doc["samples"] = cfg.samples;
  doc["seed"] = cfg.seed;
  doc["k"] = cfg.k;
  doc["constant"] = cfg.constant;
  doc["workers"] = cfg.workers;
  return doc;
}

ordered_json tree_json(const TreePtr& tree) {
  if (!tree) throw std::invalid_argument("null composition tree");
  ordered_json doc;
  switch (tree->kind) {
    case CompositionTree::Kind::LeafK1:
      doc["kind"] = "k1";
      break;
    case CompositionTree::Kind::LeafRainbowTriangle:
      doc["kind"] = "triangle";
      doc["colors"] = {tree->triangle_colors[0], tree->triangle_colors[1],
                       tree->triangle_colors[2]};
      break;
    case CompositionTree::Kind::Join:
      doc["kind"] = "join";
      doc["cut_color"] = tree->cut_color;
      doc["left"] = tree_json(tree->left);
      doc["right"] = tree_json(tree->right);
      break;
  }
  return doc;
}

TreePtr tree_from(const ordered_json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw ParseError("tree node: expected an object with a \"kind\" string");
  }
  std::string kind = doc["kind"].get<std::string>();
  if (kind == "k1") return CompositionTree::k1();
  if (kind == "triangle") {
    if (!doc.contains("colors") || !doc["colors"].is_array() || doc["colors"].size() != 3) {
      throw ParseError("triangle node: expected \"colors\" with three entries");
    }
    std::array<int, 3> colors{};
    for (int i = 0; i < 3; ++i) colors[i] = require_int(doc["colors"][i], "triangle colors");
    return CompositionTree::rainbow_triangle(colors);
  }
  if (kind == "join") {
    if (!doc.contains("cut_color") || !doc.contains("left") || !doc.contains("right")) {
      throw ParseError("join node: expected \"cut_color\", \"left\" and \"right\"");
    }
    int cut = require_int(doc["cut_color"], "cut_color");
    return CompositionTree::join(tree_from(doc["left"]), tree_from(doc["right"]), cut);
  }
  throw ParseError("tree node: unknown kind \"" + kind + "\"");
}

ordered_json witness_json(const CycleWitness& w) {
  ordered_json doc;
  doc["vertices"] = w.vertices;
  doc["colors"] = w.colors;
  return doc;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

const char* to_string(CheckMode mode) {
  return mode == CheckMode::Exhaustive ? "exhaustive" : "sample";
}

ColoredGraph parse_graph(std::string_view bytes, GraphFormat format) {
  return sniff(bytes, format) == GraphFormat::Json ? parse_graph_json(bytes)
                                                   : parse_graph_text(bytes);
}

std::string serialize_graph(const ColoredGraph& g, GraphFormat format) {
  if (format == GraphFormat::Text) {
    std::ostringstream out;
    out << "n " << g.n() << "\n";
    for (const Edge& ed : g.edge_list()) out << ed.u << " " << ed.v << " " << ed.color << "\n";
    return out.str();
  }
  return graph_json(g).dump() + "\n";
}

std::string tree_to_json(const TreePtr& tree) { return dump(tree_json(tree)); }

TreePtr tree_from_json(std::string_view bytes) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(bytes);
  } catch (const ordered_json::parse_error& err) {
    throw ParseError(std::string("invalid json: ") + err.what());
  }
  return tree_from(doc);
}

std::string report_to_json(const CheckReport& rep) {
  ordered_json doc;
  doc["id"] = to_string(rep.id);
  doc["library_version"] = kVersion;
  doc["config"] = config_json(rep.config);
  doc["guards"] = guards_json();
  doc["instances"] = rep.instances;
  doc["hypothesis_count"] = rep.hypothesis_count;
  doc["violations_total"] = rep.violations_total;
  doc["unresolved"] = rep.unresolved;
  doc["hypothesis_sparse"] = rep.hypothesis_sparse;
  ordered_json viols = ordered_json::array();
  for (const Violation& v : rep.violations) {
    ordered_json item;
    item["index"] = v.index;
    item["graph"] = ordered_json::parse(v.graph_json);
    item["reason"] = v.reason;
    viols.push_back(std::move(item));
  }
  doc["violations"] = std::move(viols);
  ordered_json notes = ordered_json::object();
  for (const auto& [key, value] : rep.notes) notes[key] = value;
  doc["notes"] = std::move(notes);
  doc["elapsed_ms"] = rep.elapsed_ms;
  return dump(doc);
}

std::string report_to_text(const CheckReport& rep) {
  std::ostringstream out;
  out << "check " << to_string(rep.id) << "\n";
  out << "library_version " << kVersion << "\n";
  const CheckConfig& cfg = rep.config;
  out << "config n_min=" << cfg.n_min << " n_max=" << cfg.n_max << " mode=" << to_string(cfg.mode)
      << " samples=" << cfg.samples << " seed=" << cfg.seed << " k=" << cfg.k
      << " constant=" << cfg.constant << " workers=" << cfg.workers << "\n";
  out << "instances " << rep.instances << "\n";
  out << "hypothesis_count " << rep.hypothesis_count << "\n";
  out << "violations_total " << rep.violations_total << "\n";
  out << "unresolved " << rep.unresolved << "\n";
  out << "hypothesis_sparse " << (rep.hypothesis_sparse ? "true" : "false") << "\n";
  for (const auto& [key, value] : rep.notes) out << "note " << key << " = " << value << "\n";
  for (const Violation& v : rep.violations) {
    out << "violation index=" << v.index << " reason=" << v.reason << "\n";
    out << "  " << v.graph_json;
    if (v.graph_json.empty() || v.graph_json.back() != '\n') out << "\n";
  }
  out << "elapsed_ms " << rep.elapsed_ms << "\n";
  return out.str();
}

std::string extremal_to_json(const ExtremalReport& rep) {
  ordered_json doc;
  doc["n"] = rep.n;
  doc["k"] = rep.k;
  doc["mode"] = rep.mode;
  doc["library_version"] = kVersion;
  if (rep.empirical_f.has_value()) {
    doc["empirical_f"] = *rep.empirical_f;
    doc["extremal_witness"] = ordered_json::parse(*rep.extremal_witness_json);
    doc["witness_e_plus_c"] = rep.witness_e_plus_c;
    doc["witness_rainbow_triangles"] = rep.witness_rainbow_triangles;
    doc["instances"] = rep.instances;
  } else {
    doc["empirical_f"] = nullptr;
  }
  doc["lower_bound_f"] = rep.lower_bound_f;
  doc["family_witness"] = ordered_json::parse(rep.family_witness_json);
  doc["elapsed_ms"] = rep.elapsed_ms;
  return dump(doc);
}

std::string extremal_to_text(const ExtremalReport& rep) {
  std::ostringstream out;
  out << "search_extremal n=" << rep.n << " k=" << rep.k << " mode=" << rep.mode << "\n";
  out << "library_version " << kVersion << "\n";
  if (rep.empirical_f.has_value()) {
    out << "empirical_f " << *rep.empirical_f << "\n";
    out << "witness_e_plus_c " << rep.witness_e_plus_c << "\n";
    out << "witness_rainbow_triangles " << rep.witness_rainbow_triangles << "\n";
    out << "instances " << rep.instances << "\n";
    out << "extremal_witness " << *rep.extremal_witness_json;
  } else {
    out << "empirical_f unavailable (witness-only mode)\n";
  }
  out << "lower_bound_f " << rep.lower_bound_f << "\n";
  out << "family_witness " << rep.family_witness_json;
  out << "elapsed_ms " << rep.elapsed_ms << "\n";
  return out.str();
}

std::string witnesses_to_json(const std::vector<CycleWitness>& ws) {
  ordered_json arr = ordered_json::array();
  for (const CycleWitness& w : ws) arr.push_back(witness_json(w));
  return dump(arr);
}

std::string trace_to_json(const HeuristicTrace& trace) {
  ordered_json doc;
  doc["found"] = trace.found;
  doc["greedy_cycles"] = trace.greedy_cycles;
  doc["anchors_tried"] = trace.anchors_tried;
  doc["stages_total"] = trace.stages_total;
  ordered_json stages = ordered_json::array();
  for (const ReductionStage& st : trace.stages) {
    ordered_json item;
    item["anchor_u"] = st.anchor_u;
    item["anchor_v"] = st.anchor_v;
    item["s1"] = st.s1;
    item["s2"] = st.s2;
    item["digraph_vertices"] = st.digraph_vertices;
    item["arcs"] = st.arcs;
    item["min_out_degree"] = st.min_out_degree;
    item["packing_threshold"] = st.packing_threshold;
    item["outcome"] = st.outcome;
    stages.push_back(std::move(item));
  }
  doc["stages"] = std::move(stages);
  return dump(doc);
}

std::string bipartition_to_json(const ColoredGraph& g, const BipartitionState& st) {
  ordered_json doc;
  doc["side_x"] = st.side_x();
  doc["side_y"] = st.side_y();
  doc["potential"] = st.potential;
  bool ok = true;
  for (int v = 0; v < g.n(); ++v) ok = ok && bipartite_inequality_holds(g, st.in_y, v);
  doc["inequality_ok"] = ok;
  ordered_json moves = ordered_json::array();
  for (const BipartiteMove& mv : st.moves) {
    ordered_json item;
    item["vertex"] = mv.vertex;
    item["f_before"] = mv.f_before;
    item["f_after"] = mv.f_after;
    moves.push_back(std::move(item));
  }
  doc["moves"] = std::move(moves);
  return dump(doc);
}

std::string decomposition_to_json(const GallaiDecomposition& d) {
  ordered_json doc;
  doc["parts"] = d.parts;
  doc["reduced_colors"] = d.reduced_colors;
  doc["pair_colors"] = d.pair_colors;
  return dump(doc);
}

std::string stats_to_json(const ColoredGraph& g) {
  GraphStats st = stats(g);
  ordered_json doc;
  doc["n"] = g.n();
  doc["e"] = st.e;
  doc["c"] = st.c;
  doc["min_color_degree"] = st.min_color_degree;
  doc["degree"] = st.degree;
  doc["color_degree"] = st.color_degree;
  doc["saturated_degree"] = saturated_degrees(g);
  doc["colors"] = st.colors;
  doc["rainbow"] = is_rainbow(g);
  doc["underlying_complete"] = underlying_complete(g);
  doc["gallai"] = is_gallai(g);
  doc["triangles"] = count_triangles(g);
  doc["rainbow_triangles"] = count_rainbow_triangles(g);
  return dump(doc);
}

}  // namespace rainbowlab
