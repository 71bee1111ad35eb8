#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <string>

#include "canonical.hpp"
#include "checks.hpp"
#include "colored_graph.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "graph_io.hpp"
#include "oracles.hpp"
#include "rainbow.hpp"
#include "reduction.hpp"
#include "rng.hpp"
#include "spanning_bipartite.hpp"
#include "version.hpp"

using namespace rainbowlab;
using nlohmann::json;

TEST_CASE("json graph files parse") {
  ColoredGraph g = parse_graph(R"({"n": 3, "edges": [[0,1,0],[0,2,2],[1,2,1]]})");
  CHECK(g.n() == 3);
  CHECK(g.color_at(0, 1) == 0);
  CHECK(g.color_at(0, 2) == 2);
  CHECK(g.color_at(1, 2) == 1);

  ColoredGraph empty = parse_graph(R"({"n": 0, "edges": []})");
  CHECK(empty.n() == 0);
  CHECK(empty.edge_count() == 0);
}

TEST_CASE("text graph files parse") {
  ColoredGraph g = parse_graph("n 3\n0 1 0\n0 2 2\n1 2 1\n");
  CHECK(g.n() == 3);
  CHECK(g.color_at(1, 2) == 1);
  // Blank lines and a missing trailing newline are fine.
  ColoredGraph h = parse_graph("\nn 2\n\n0 1 7");
  CHECK(h.color_at(0, 1) == 7);
  // Explicit format overrides the sniff.
  CHECK_THROWS_AS(parse_graph("n 2\n0 1 7\n", GraphFormat::Json), ParseError);
}

TEST_CASE("format sniffing keys on the first non-space byte") {
  CHECK(parse_graph("  \n\t {\"n\":1,\"edges\":[]}").n() == 1);
  CHECK(parse_graph("  \nn 1\n").n() == 1);
  CHECK_THROWS_WITH_AS(parse_graph("   \n \t "), "empty graph input", ParseError);
}

TEST_CASE("json parse errors carry positions") {
  CHECK_THROWS_WITH_AS(parse_graph("{\"n\": 2"), doctest::Contains("invalid json"), ParseError);
  CHECK_THROWS_WITH_AS(parse_graph(R"([1,2])", GraphFormat::Json), "graph json must be an object",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_graph(R"({"edges": []})"), "missing field \"n\"", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph(R"({"n": 1})"), "missing field \"edges\"", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph(R"({"n": 1, "edges": [], "weight": 3})"),
                       "unknown graph field \"weight\"", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph(R"({"n": "three", "edges": []})"),
                       "n: expected an integer", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph(R"({"n": 2, "edges": [[0,1]]})"),
                       "edges[0]: expected [u, v, color]", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph(R"({"n": 2, "edges": [[0,1,0],[1,1,2]]})"),
                       "edges[1]: loop edge (1, 1)", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph(R"({"n": 2, "edges": [[0,3,0]]})"),
                       doctest::Contains("edges[0]: vertex out of range"), ParseError);
}

TEST_CASE("text parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_graph("m 3\n"), "line 1: expected header \"n <count>\"", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("n 3 4\n"), "line 1: trailing token \"4\"", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("n 2\n0 1\n"), "line 2: expected \"u v color\"", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("n 2\n0 1 0 9\n"), "line 2: trailing token \"9\"", ParseError);
  CHECK_THROWS_WITH_AS(parse_graph("n -1\n"), "line 1: vertex count must be non-negative",
                       ParseError);
}

TEST_CASE("serialization round trips and is stable") {
  Rng rng(91);
  for (int round = 0; round < 100; ++round) {
    int n = rng.below_int(10);
    ColoredGraph g = oracle::random_graph(rng, n, 0.5, 1 + rng.below_int(8));
    std::string as_json = serialize_graph(g, GraphFormat::Json);
    std::string as_text = serialize_graph(g, GraphFormat::Text);
    CHECK(as_json.back() == '\n');
    CHECK(as_json.find('\n') == as_json.size() - 1);  // single line
    CHECK(as_text.rfind("n " + std::to_string(n), 0) == 0);
    CHECK(serialize_graph(parse_graph(as_json), GraphFormat::Json) == as_json);
    CHECK(serialize_graph(parse_graph(as_text), GraphFormat::Json) == as_json);
    CHECK(serialize_graph(parse_graph(as_text), GraphFormat::Text) == as_text);
  }
}

TEST_CASE("composition trees round trip through json") {
  for (uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    TreePtr tree = random_tree(8, 2, seed);
    std::string bytes = tree_to_json(tree);
    TreePtr back = tree_from_json(bytes);
    CHECK(tree_to_json(back) == bytes);
    CHECK(serialize_graph(gen_from_tree(back)) == serialize_graph(gen_from_tree(tree)));
  }
}

TEST_CASE("malformed tree json is rejected") {
  CHECK_THROWS_AS(tree_from_json("{"), ParseError);
  CHECK_THROWS_WITH_AS(tree_from_json(R"({"kind": "nope"})"),
                       "tree node: unknown kind \"nope\"", ParseError);
  CHECK_THROWS_WITH_AS(tree_from_json(R"({"kind": "triangle", "colors": [1, 2]})"),
                       "triangle node: expected \"colors\" with three entries", ParseError);
  CHECK_THROWS_WITH_AS(tree_from_json(R"({"kind": "join", "left": {"kind": "k1"}})"),
                       "join node: expected \"cut_color\", \"left\" and \"right\"", ParseError);
  CHECK_THROWS_AS(tree_from_json(R"([1])"), ParseError);
}

TEST_CASE("check reports render to json with the full envelope") {
  CheckConfig cfg;
  cfg.n_min = 3;
  cfg.n_max = 3;
  CheckReport rep = run_check(CheckId::XF_TRIANGLE_FREE, cfg);
  json doc = json::parse(report_to_json(rep));
  CHECK(doc["id"] == "XF_TRIANGLE_FREE");
  CHECK(doc["library_version"] == kVersion);
  CHECK(doc["config"]["n_min"] == 3);
  CHECK(doc["config"]["mode"] == "exhaustive");
  CHECK(doc["config"]["workers"] == 1);
  CHECK(doc["guards"]["canonical_key_max_n"] == guards::kCanonicalKeyMaxN);
  CHECK(doc["guards"]["sample_attempts_per_instance"] == guards::kSampleAttemptsPerInstance);
  CHECK(doc["instances"].get<long long>() == rep.instances);
  CHECK(doc["hypothesis_sparse"] == false);
  CHECK(doc["violations"].is_array());
  CHECK(doc["violations"].size() == rep.violations.size());
  REQUIRE(!rep.violations.empty());
  CHECK(doc["violations"][0]["graph"].contains("edges"));
  CHECK(doc["violations"][0]["reason"].get<std::string>().rfind("XF_TRIANGLE_FREE: ", 0) == 0);
  CHECK(doc["notes"].is_object());
  CHECK(doc.contains("elapsed_ms"));
}

TEST_CASE("check reports render to text") {
  CheckConfig cfg;
  cfg.n_min = 3;
  cfg.n_max = 3;
  cfg.mode = CheckMode::Sample;
  cfg.samples = 5;
  cfg.seed = 12;
  CheckReport rep = run_check(CheckId::L_SAT, cfg);
  std::string text = report_to_text(rep);
  CHECK(text.rfind("check L_SAT\n", 0) == 0);
  CHECK(text.find("config n_min=3 n_max=3 mode=sample samples=5 seed=12") != std::string::npos);
  CHECK(text.find("violations_total 0\n") != std::string::npos);
  CHECK(text.find("note attempts = ") != std::string::npos);
  CHECK(text.find("elapsed_ms ") != std::string::npos);

  CheckReport bad = run_check(CheckId::XF_TRIANGLE_FREE, CheckConfig{3, 3});
  std::string bad_text = report_to_text(bad);
  CHECK(bad_text.find("violation index=") != std::string::npos);
  CHECK(bad_text.find("reason=XF_TRIANGLE_FREE: ") != std::string::npos);
}

TEST_CASE("extremal reports render in both modes") {
  ExtremalReport witness = search_extremal(6, 2, "witness-only", 3);
  json wdoc = json::parse(extremal_to_json(witness));
  CHECK(wdoc["empirical_f"].is_null());
  CHECK(wdoc["lower_bound_f"] == 1);
  CHECK(wdoc["family_witness"].contains("n"));
  CHECK_FALSE(wdoc.contains("extremal_witness"));
  CHECK(extremal_to_text(witness).find("empirical_f unavailable") != std::string::npos);

  ExtremalReport full = search_extremal(4, 1, "exhaustive", 0);
  json fdoc = json::parse(extremal_to_json(full));
  CHECK(fdoc["empirical_f"] == 0);
  CHECK(fdoc["extremal_witness"].contains("edges"));
  CHECK(fdoc["witness_e_plus_c"] == 9);
  std::string ftext = extremal_to_text(full);
  CHECK(ftext.find("empirical_f 0\n") != std::string::npos);
  CHECK(ftext.find("extremal_witness {") != std::string::npos);
}

TEST_CASE("cycle witness lists render to json") {
  ColoredGraph g = ColoredGraph::build(3, {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}});
  auto w = find_rainbow_cycle(g, LengthSpec::any());
  REQUIRE(w.has_value());
  json doc = json::parse(witnesses_to_json({*w}));
  REQUIRE(doc.is_array());
  CHECK(doc[0]["vertices"] == json::array({0, 1, 2}));
  CHECK(doc[0]["colors"].size() == 3);
  CHECK(json::parse(witnesses_to_json({})).empty());
}

TEST_CASE("heuristic traces render to json") {
  ColoredGraph g = ColoredGraph::complete_monochromatic(6);
  HeuristicTrace trace;
  auto res = find_disjoint_rainbow_cycles_heuristic(g, 1, 64, &trace);
  CHECK_FALSE(res.has_value());
  json doc = json::parse(trace_to_json(trace));
  CHECK(doc["found"] == false);
  CHECK(doc["greedy_cycles"] == 0);
  CHECK(doc["anchors_tried"].get<long long>() > 0);
  CHECK(doc["stages"].is_array());
  CHECK(doc["stages_total"].get<long long>() >= static_cast<long long>(doc["stages"].size()));
  if (!doc["stages"].empty()) {
    const auto& st = doc["stages"][0];
    CHECK(st.contains("anchor_u"));
    CHECK(st.contains("min_out_degree"));
    CHECK(st.contains("outcome"));
  }
}

TEST_CASE("bipartition states render to json") {
  ColoredGraph g = ColoredGraph::build(4, {{0, 1, 0}, {1, 2, 1}, {2, 3, 2}, {0, 3, 3}});
  BipartitionState st = spanning_bipartite(g);
  json doc = json::parse(bipartition_to_json(g, st));
  CHECK(doc["inequality_ok"] == true);
  CHECK(doc["side_x"].size() + doc["side_y"].size() == 4);
  CHECK(doc["potential"].get<long long>() == st.potential);
  CHECK(doc["moves"].is_array());
}

TEST_CASE("gallai decompositions render to json") {
  ColoredGraph g = ColoredGraph::complete_monochromatic(4, 2);
  GallaiDecomposition d = gallai_decompose(g);
  json doc = json::parse(decomposition_to_json(d));
  CHECK(doc["parts"].is_array());
  CHECK(doc["parts"].size() == d.parts.size());
  CHECK(doc["reduced_colors"] == d.reduced_colors);
  CHECK(doc["pair_colors"].is_array());
}

TEST_CASE("graph statistics render to json") {
  ColoredGraph g = ColoredGraph::build(3, {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}});
  json doc = json::parse(stats_to_json(g));
  CHECK(doc["n"] == 3);
  CHECK(doc["e"] == 3);
  CHECK(doc["c"] == 3);
  CHECK(doc["min_color_degree"] == 2);
  CHECK(doc["degree"] == json::array({2, 2, 2}));
  CHECK(doc["rainbow"] == true);
  CHECK(doc["underlying_complete"] == true);
  CHECK(doc["gallai"] == false);
  CHECK(doc["triangles"] == 1);
  CHECK(doc["rainbow_triangles"] == 1);
  CHECK(doc["saturated_degree"].is_array());
}
