#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbowlab.h"

namespace {

// Owns a string returned by the library.
struct CStr {
  char* p = nullptr;
  ~CStr() { rb_string_free(p); }
  CStr() = default;
  CStr(const CStr&) = delete;
  CStr& operator=(const CStr&) = delete;
};

struct GraphHandle {
  rb_graph* p = nullptr;
  ~GraphHandle() { rb_graph_free(p); }
  GraphHandle() = default;
  GraphHandle(const GraphHandle&) = delete;
  GraphHandle& operator=(const GraphHandle&) = delete;
};

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

int library_error(const char* what) {
  std::cerr << "error: " << what << ": " << rb_last_error() << "\n";
  return 2;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

bool write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return out.good();
}

int resolve_workers(int& workers_out) {
  workers_out = 1;
  const char* env = std::getenv("RAINBOWLAB_THREADS");
  if (!env || !*env) return 0;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (!end || *end != '\0' || v < 1 || v > 256) {
    return usage_error("RAINBOWLAB_THREADS must be an integer in [1, 256]");
  }
  workers_out = static_cast<int>(v);
  return 0;
}

void echo_config(const std::string& line) { std::cerr << line << "\n"; }

int parse_graph_file(const std::string& path, GraphHandle& g) {
  std::string bytes;
  if (!read_file(path, bytes)) {
    return usage_error("cannot read " + path);
  }
  if (rb_graph_parse(bytes.c_str(), "auto", &g.p) != RB_OK) {
    return library_error(("parsing " + path).c_str());
  }
  return 0;
}

struct GenArgs {
  std::string family;
  int n = 1;
  int k = 2;
  int a = 3;
  int b = 3;
  uint64_t seed = 0;
  std::string out;
  std::string tree_out;
};

int run_gen(const GenArgs& args) {
  std::ostringstream cfg;
  cfg << "gen config: {\"family\":\"" << args.family << "\",\"n\":" << args.n
      << ",\"k\":" << args.k << ",\"a\":" << args.a << ",\"b\":" << args.b
      << ",\"seed\":" << args.seed << ",\"out\":\"" << args.out << "\",\"tree_out\":\""
      << args.tree_out << "\"}";
  echo_config(cfg.str());

  GraphHandle g;
  CStr tree;
  bool want_tree = !args.tree_out.empty();
  if (rb_gen_family(args.family.c_str(), args.n, args.k, args.a, args.b, args.seed, &g.p,
                    want_tree ? &tree.p : nullptr) != RB_OK) {
    return library_error("gen");
  }
  if (want_tree && !tree.p) {
    return usage_error("family " + args.family + " has no composition tree");
  }
  CStr bytes;
  if (rb_graph_serialize(g.p, "json", &bytes.p) != RB_OK) return library_error("serialize");
  if (!write_output(args.out, bytes.p)) return usage_error("cannot write " + args.out);
  if (want_tree && !write_output(args.tree_out, tree.p)) {
    return usage_error("cannot write " + args.tree_out);
  }
  return 0;
}

struct CheckArgs {
  std::string id;
  int n_min = 3;
  int n_max = 5;
  std::string mode = "exhaustive";
  long long samples = 1000;
  uint64_t seed = 0;
  int k = 1;
  int constant = 64;
  std::string format = "json";
};

int run_check(const CheckArgs& args) {
  int workers = 1;
  if (int rc = resolve_workers(workers)) return rc;
  std::ostringstream cfg;
  cfg << "{\"n_min\":" << args.n_min << ",\"n_max\":" << args.n_max << ",\"mode\":\""
      << args.mode << "\",\"samples\":" << args.samples << ",\"seed\":" << args.seed
      << ",\"k\":" << args.k << ",\"constant\":" << args.constant
      << ",\"workers\":" << workers << "}";
  echo_config("check config: {\"id\":\"" + args.id + "\",\"config\":" + cfg.str() +
              ",\"format\":\"" + args.format + "\"}");

  CStr report;
  long long violations = 0;
  if (rb_run_check(args.id.c_str(), cfg.str().c_str(), args.format.c_str(), &report.p,
                   &violations) != RB_OK) {
    return library_error("check");
  }
  std::cout << report.p;
  return violations > 0 ? 1 : 0;
}

struct SearchArgs {
  int n = 4;
  int k = 1;
  std::string mode = "exhaustive";
  uint64_t seed = 0;
  std::string format = "json";
};

int run_search(const SearchArgs& args) {
  std::ostringstream cfg;
  cfg << "search config: {\"n\":" << args.n << ",\"k\":" << args.k << ",\"mode\":\"" << args.mode
      << "\",\"seed\":" << args.seed << ",\"format\":\"" << args.format << "\"}";
  echo_config(cfg.str());

  CStr report;
  if (rb_search_extremal(args.n, args.k, args.mode.c_str(), args.seed, args.format.c_str(),
                         &report.p) != RB_OK) {
    return library_error("search");
  }
  std::cout << report.p;
  return 0;
}

struct ReduceArgs {
  std::string in;
  int k = 1;
  int constant = 64;
};

int run_reduce(const ReduceArgs& args) {
  echo_config("reduce config: {\"in\":\"" + args.in + "\",\"k\":" + std::to_string(args.k) +
              ",\"constant\":" + std::to_string(args.constant) + "}");
  GraphHandle g;
  if (int rc = parse_graph_file(args.in, g)) return rc;
  CStr result;
  if (rb_reduce(g.p, args.k, args.constant, &result.p) != RB_OK) {
    return library_error("reduce");
  }
  std::cout << result.p << "\n";
  nlohmann::json j = nlohmann::json::parse(result.p);
  return j.at("found").get<bool>() ? 0 : 1;
}

int run_stats(const std::string& in) {
  echo_config("stats config: {\"in\":\"" + in + "\"}");
  GraphHandle g;
  if (int rc = parse_graph_file(in, g)) return rc;
  CStr out;
  if (rb_graph_stats_json(g.p, &out.p) != RB_OK) return library_error("stats");
  std::cout << out.p;
  return 0;
}

int run_minimize(const std::string& in, const std::string& id) {
  echo_config("minimize config: {\"in\":\"" + in + "\",\"id\":\"" + id + "\"}");
  GraphHandle g;
  if (int rc = parse_graph_file(in, g)) return rc;
  GraphHandle shrunk;
  if (rb_minimize(g.p, id.c_str(), nullptr, &shrunk.p) != RB_OK) {
    return library_error("minimize");
  }
  CStr bytes;
  if (rb_graph_serialize(shrunk.p, "json", &bytes.p) != RB_OK) return library_error("serialize");
  std::cout << bytes.p;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge-colored graph toolkit: extremal families, rainbow cycle search, "
               "claim checking (rainbowlab " +
               std::string(rb_version()) + ")"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate a family member");
  gen->add_option("--family", gen_args.family, "g0 | g1 | gk | rainbow-bipartite")
      ->required()
      ->check(CLI::IsMember({"g0", "g1", "gk", "rainbow-bipartite"}));
  gen->add_option("--n", gen_args.n, "vertex count (g0/g1/gk)");
  gen->add_option("--k", gen_args.k, "rainbow triangle count (gk)");
  gen->add_option("--a", gen_args.a, "side A size (rainbow-bipartite)");
  gen->add_option("--b", gen_args.b, "side B size (rainbow-bipartite)");
  gen->add_option("--seed", gen_args.seed, "tree shape seed");
  gen->add_option("--out", gen_args.out, "graph output file (default stdout)");
  gen->add_option("--tree-out", gen_args.tree_out, "composition tree output file");

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "run a claim check");
  check->add_option("--id", check_args.id, "check identifier (e.g. T1)")->required();
  check->add_option("--n-min", check_args.n_min, "smallest order");
  check->add_option("--n-max", check_args.n_max, "largest order");
  check->add_option("--mode", check_args.mode, "exhaustive | sample")
      ->check(CLI::IsMember({"exhaustive", "sample"}));
  check->add_option("--samples", check_args.samples, "accepted instances in sample mode");
  check->add_option("--seed", check_args.seed, "sample seed");
  check->add_option("--k", check_args.k, "k for the k-parameterized checks");
  check->add_option("--constant", check_args.constant, "pair bound constant")
      ->check(CLI::IsMember({64, 18}));
  check->add_option("--format", check_args.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand("search", "extremal scan for e + c thresholds");
  search->add_option("--n", search_args.n, "order")->required();
  search->add_option("--k", search_args.k, "rainbow triangle count threshold");
  search->add_option("--mode", search_args.mode, "exhaustive | witness-only")
      ->check(CLI::IsMember({"exhaustive", "witness-only"}));
  search->add_option("--seed", search_args.seed, "witness tree seed");
  search->add_option("--format", search_args.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));

  ReduceArgs reduce_args;
  CLI::App* reduce = app.add_subcommand("reduce", "disjoint rainbow cycle packing with trace");
  reduce->add_option("--in", reduce_args.in, "graph file")->required();
  reduce->add_option("--k", reduce_args.k, "cycles wanted");
  reduce->add_option("--constant", reduce_args.constant, "pair bound constant")
      ->check(CLI::IsMember({64, 18}));

  std::string stats_in;
  CLI::App* stats = app.add_subcommand("stats", "per-graph statistics");
  stats->add_option("--in", stats_in, "graph file")->required();

  std::string min_in;
  std::string min_id;
  CLI::App* minimize = app.add_subcommand("minimize", "shrink a violating instance");
  minimize->add_option("--in", min_in, "graph file")->required();
  minimize->add_option("--id", min_id, "check identifier")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (gen->parsed()) return run_gen(gen_args);
  if (check->parsed()) return run_check(check_args);
  if (search->parsed()) return run_search(search_args);
  if (reduce->parsed()) return run_reduce(reduce_args);
  if (stats->parsed()) return run_stats(stats_in);
  if (minimize->parsed()) return run_minimize(min_in, min_id);
  return 2;
}
