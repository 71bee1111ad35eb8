#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "checks.hpp"
#include "colored_graph.hpp"
#include "families.hpp"
#include "rainbow.hpp"
#include "reduction.hpp"
#include "spanning_bipartite.hpp"

namespace rainbowlab {

// Graph files come in two shapes:
//   json:  {"n": 3, "edges": [[0,1,0],[0,2,2],[1,2,1]]}
//   text:  "n 3" header line, then one "u v color" triple per line
// Auto sniffs: first non-whitespace byte '{' means json. serialize always
// lists edges with u < v in lexicographic order, so parse(serialize(g)) == g.
enum class GraphFormat { Auto, Json, Text };

ColoredGraph parse_graph(std::string_view bytes, GraphFormat format = GraphFormat::Auto);
std::string serialize_graph(const ColoredGraph& g, GraphFormat format = GraphFormat::Json);

// Composition trees as nested JSON: {"kind":"k1"}, {"kind":"triangle",
// "colors":[a,b,c]}, or {"kind":"join","cut_color":c,"left":...,"right":...}.
std::string tree_to_json(const TreePtr& tree);
TreePtr tree_from_json(std::string_view bytes);

// Report renderers. JSON is the machine format, text a line-oriented summary.
// Both embed the library version and resolved guard values; elapsed_ms is the
// only timing-dependent field.
std::string report_to_json(const CheckReport& rep);
std::string report_to_text(const CheckReport& rep);
std::string extremal_to_json(const ExtremalReport& rep);
std::string extremal_to_text(const ExtremalReport& rep);

std::string witnesses_to_json(const std::vector<CycleWitness>& ws);
std::string trace_to_json(const HeuristicTrace& trace);
std::string bipartition_to_json(const ColoredGraph& g, const BipartitionState& st);
std::string decomposition_to_json(const GallaiDecomposition& d);

// Full per-graph statistics blob for the stats subcommand.
std::string stats_to_json(const ColoredGraph& g);

const char* to_string(CheckMode mode);

}  // namespace rainbowlab
