// Command-line front end.
//
//   kdpwml query    --graph G -s S -t T [--algo A] ...   one query, full report
//   kdpwml bench    --graph G --random N --seed S ...    seeded batch + metrics
//   kdpwml gen-grid --rows R --cols C --seed S ...       synthetic grid graph
//   kdpwml export   --graph G --coords C -s S -t T ...   GeoJSON of one result
//
// Exit codes: 0 success, 2 input error, 3 a budget or time limit cut at
// least one query short.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kdpwml/bench.hpp"
#include "kdpwml/io.hpp"
#include "kdpwml/kdpwml_exact.hpp"
#include "kdpwml/solver_types.hpp"

namespace {

using namespace kdpwml;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitResourceLimited = 3;

struct CommonOptions {
  std::string graph_path;
  std::string format = "edgelist";  // or "dimacs"
  std::string coords_path;
  int k = 3;
  double theta = 0.5;
  std::vector<std::string> algos;
  std::string out_format = "json";  // or "csv"
  std::size_t ksp_budget = kDefaultKspBudget;
  std::size_t subset_budget = kDefaultSubsetBudget;
  std::int64_t timeout_ms = 0;  // 0 = unlimited
  int threads = 1;
};

void add_solver_flags(CLI::App& cmd, CommonOptions& opt) {
  cmd.add_option("--k", opt.k, "requested number of paths")->capture_default_str();
  cmd.add_option("--theta", opt.theta, "similarity threshold in (0,1]")->capture_default_str();
  cmd.add_option("--ksp-budget", opt.ksp_budget, "max paths drawn from a KSP stream")
      ->capture_default_str();
  cmd.add_option("--subset-budget", opt.subset_budget, "max stored compatible subsets")
      ->capture_default_str();
  cmd.add_option("--timeout-ms", opt.timeout_ms, "per-query time limit, 0 = unlimited")
      ->capture_default_str();
}

void add_graph_flags(CLI::App& cmd, CommonOptions& opt, bool coords) {
  cmd.add_option("--graph", opt.graph_path, "graph file")->required();
  cmd.add_option("--format", opt.format, "graph format")
      ->check(CLI::IsMember({"dimacs", "edgelist"}))
      ->capture_default_str();
  if (coords) cmd.add_option("--coords", opt.coords_path, "DIMACS .co coordinate file");
}

SolverOptions solver_options(const CommonOptions& opt) {
  SolverOptions solver;
  solver.ksp_budget = opt.ksp_budget;
  solver.subset_budget = opt.subset_budget;
  if (opt.timeout_ms > 0) solver.time_limit = std::chrono::milliseconds(opt.timeout_ms);
  return solver;
}

Graph load_graph(const CommonOptions& opt) {
  std::ifstream in(opt.graph_path);
  if (!in) throw std::runtime_error("cannot open graph file '" + opt.graph_path + "'");
  Graph g = opt.format == "dimacs" ? load_dimacs_gr(in) : load_edge_list(in);
  if (!opt.coords_path.empty()) {
    std::ifstream cin_(opt.coords_path);
    if (!cin_) throw std::runtime_error("cannot open coords file '" + opt.coords_path + "'");
    g.set_coordinates(load_dimacs_co(cin_, g.node_count()));
  }
  return g;
}

std::vector<Algorithm> parse_algorithms(const std::vector<std::string>& names) {
  if (names.empty()) {
    return {std::begin(kAllAlgorithms), std::end(kAllAlgorithms)};
  }
  std::vector<Algorithm> out;
  for (const std::string& name : names) {
    const auto a = parse_algorithm(name);
    if (!a) throw std::runtime_error("unknown algorithm '" + name + "'");
    out.push_back(*a);
  }
  return out;
}

int cmd_query(const CommonOptions& opt, std::uint64_t s, std::uint64_t t, bool geojson) {
  const Graph g = load_graph(opt);
  if (s >= g.node_count() || t >= g.node_count()) {
    throw std::runtime_error("node id out of range");
  }
  const auto algos = parse_algorithms(opt.algos);
  if (algos.size() != 1) throw std::runtime_error("pick exactly one --algo for this command");
  const Query q{static_cast<NodeId>(s), static_cast<NodeId>(t), opt.k, opt.theta};
  q.validate(g);
  const ResultSet result = run_algorithm(g, algos[0], q, solver_options(opt));
  if (geojson) {
    export_geojson(std::cout, g, result.paths, algorithm_name(algos[0]));
  } else if (opt.out_format == "csv") {
    write_single_report_csv(std::cout, g, q, algos[0], result);
  } else {
    write_single_report_json(std::cout, g, q, algos[0], result);
  }
  return result.stats.resource_limited ? kExitResourceLimited : kExitOk;
}

int cmd_bench(const CommonOptions& opt, const std::string& queries_path, std::int64_t random_count,
              std::uint64_t seed) {
  const Graph g = load_graph(opt);
  std::vector<std::pair<NodeId, NodeId>> pairs;
  if (!queries_path.empty()) {
    std::ifstream in(queries_path);
    if (!in) throw std::runtime_error("cannot open query file '" + queries_path + "'");
    pairs = load_query_file(in);
  } else {
    if (random_count < 1) throw std::runtime_error("--random must be >= 1");
    pairs = draw_random_queries(g, static_cast<std::size_t>(random_count), seed);
  }
  BenchConfig config;
  config.algorithms = parse_algorithms(opt.algos);
  config.k = opt.k;
  config.theta = opt.theta;
  config.solver = solver_options(opt);
  config.threads = opt.threads;
  const BatchResult batch = run_batch(g, config, pairs);
  if (opt.out_format == "csv") {
    write_batch_csv(std::cout, batch);
  } else {
    write_batch_json(std::cout, batch);
  }
  for (const QueryRow& row : batch.rows) {
    if (row.resource_limited) return kExitResourceLimited;
  }
  return kExitOk;
}

int cmd_gen_grid(std::uint32_t rows, std::uint32_t cols, std::uint64_t seed,
                 const std::string& out_path, const std::string& format,
                 const std::string& coords_out) {
  Graph g = gen_grid(rows, cols, seed);
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
  if (format == "dimacs") {
    write_dimacs_gr(out, g);
  } else {
    write_edge_list(out, g);
  }
  if (!coords_out.empty()) {
    // Unit-spaced synthetic coordinates: lon = column, lat = row.
    std::vector<LonLat> coords;
    coords.reserve(g.node_count());
    for (std::uint32_t r = 0; r < rows; ++r) {
      for (std::uint32_t c = 0; c < cols; ++c) coords.push_back({double(c), double(r)});
    }
    g.set_coordinates(std::move(coords));
    std::ofstream co(coords_out);
    if (!co) throw std::runtime_error("cannot open coords file '" + coords_out + "'");
    write_dimacs_co(co, g);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k pairwise-dissimilar paths with minimum collective length"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::uint64_t source = 0;
  std::uint64_t target = 0;

  auto* query = app.add_subcommand("query", "run one query and print the result");
  add_graph_flags(*query, opt, true);
  add_solver_flags(*query, opt);
  query->add_option("-s,--source", source, "source node id")->required();
  query->add_option("-t,--target", target, "target node id")->required();
  query->add_option("--algo", opt.algos, "algorithm (exact, svpd, ssvpd-plus, greedy-ksp)")
      ->expected(1);
  query->add_option("--out", opt.out_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  std::string queries_path;
  std::int64_t random_count = 0;
  std::uint64_t seed = 1;
  auto* bench = app.add_subcommand("bench", "run a query batch and print metrics");
  add_graph_flags(*bench, opt, true);
  add_solver_flags(*bench, opt);
  bench->add_option("--algo", opt.algos, "algorithms to run (repeatable; default all)");
  bench->add_option("--queries", queries_path, "query file: one 's t' pair per line");
  bench->add_option("--random", random_count, "number of random queries");
  bench->add_option("--seed", seed, "PRNG seed for --random")->capture_default_str();
  bench->add_option("--threads", opt.threads, "concurrent query evaluations")
      ->capture_default_str();
  bench->add_option("--out", opt.out_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  std::uint32_t rows = 2;
  std::uint32_t cols = 2;
  std::string grid_out;
  std::string grid_format = "edgelist";
  std::string grid_coords_out;
  auto* gen = app.add_subcommand("gen-grid", "generate a random-weight grid graph");
  gen->add_option("--rows", rows, "grid rows (>= 2)")->required();
  gen->add_option("--cols", cols, "grid columns (>= 2)")->required();
  gen->add_option("--seed", seed, "PRNG seed for edge weights")->capture_default_str();
  gen->add_option("--graph-out", grid_out, "output graph file")->required();
  gen->add_option("--format", grid_format, "output format")
      ->check(CLI::IsMember({"dimacs", "edgelist"}))
      ->capture_default_str();
  gen->add_option("--coords-out", grid_coords_out, "also write unit-spaced coordinates (.co)");

  auto* exp = app.add_subcommand("export", "run one query and print GeoJSON");
  add_graph_flags(*exp, opt, true);
  add_solver_flags(*exp, opt);
  exp->add_option("-s,--source", source, "source node id")->required();
  exp->add_option("-t,--target", target, "target node id")->required();
  exp->add_option("--algo", opt.algos, "algorithm (exact, svpd, ssvpd-plus, greedy-ksp)")
      ->expected(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (opt.algos.empty() && (query->parsed() || exp->parsed())) opt.algos = {"exact"};
    if (query->parsed()) return cmd_query(opt, source, target, false);
    if (exp->parsed()) return cmd_query(opt, source, target, true);
    if (bench->parsed()) {
      if (queries_path.empty() == (random_count == 0)) {
        throw std::runtime_error("pick exactly one of --queries FILE or --random N");
      }
      return cmd_bench(opt, queries_path, random_count, seed);
    }
    if (gen->parsed()) return cmd_gen_grid(rows, cols, seed, grid_out, grid_format,
                                           grid_coords_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}
