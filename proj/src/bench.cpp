#include "kdpwml/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "kdpwml/greedy_ksp.hpp"
#include "kdpwml/io.hpp"
#include "kdpwml/kdpwml_exact.hpp"
#include "kdpwml/shortest_path.hpp"
#include "kdpwml/ssvp.hpp"

namespace kdpwml {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::vector<char> reachable_from(const Graph& g, NodeId source) {
  std::vector<char> seen(g.node_count(), 0);
  std::deque<NodeId> frontier{source};
  seen[source] = 1;
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.pop_front();
    for (EdgeId id : g.out_edges(u)) {
      const NodeId v = g.edge(id).head;
      if (!seen[v]) {
        seen[v] = 1;
        frontier.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::exact: return "exact";
    case Algorithm::svpd: return "svpd";
    case Algorithm::ssvpd_plus: return "ssvpd-plus";
    case Algorithm::greedy_ksp: return "greedy-ksp";
  }
  throw std::logic_error("unknown algorithm");
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms) {
    if (algorithm_name(a) == name) return a;
  }
  return std::nullopt;
}

ResultSet run_algorithm(const Graph& g, Algorithm a, const Query& q, const SolverOptions& opts) {
  switch (a) {
    case Algorithm::exact: return solve_exact(g, q, opts);
    case Algorithm::svpd: return solve_svp_d(g, q, opts);
    case Algorithm::ssvpd_plus: return solve_ssvp_d_plus(g, q);
    case Algorithm::greedy_ksp: return solve_greedy_ksp(g, q, opts);
  }
  throw std::logic_error("unknown algorithm");
}

std::vector<std::pair<NodeId, NodeId>> draw_random_queries(const Graph& g, std::size_t count,
                                                           std::uint64_t seed) {
  if (g.node_count() < 2) throw std::invalid_argument("random queries need at least two nodes");
  std::mt19937_64 rng(seed);
  const auto draw_node = [&]() -> NodeId {
    // Modulo keeps the draw platform-independent; the bias is negligible for
    // realistic node counts.
    return static_cast<NodeId>(rng() % g.node_count());
  };
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(count);
  std::vector<char> reach;
  NodeId reach_source = 0;
  while (out.size() < count) {
    const NodeId s = draw_node();
    const NodeId t = draw_node();
    if (s == t) continue;
    if (reach.empty() || reach_source != s) {
      reach = reachable_from(g, s);
      reach_source = s;
    }
    if (!reach[t]) continue;
    out.emplace_back(s, t);
  }
  return out;
}

std::vector<std::pair<NodeId, NodeId>> load_query_file(std::istream& in) {
  std::vector<std::pair<NodeId, NodeId>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream iss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (iss >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) throw ParseError(lineno, "expected '<source> <target>'");
    NodeId ids[2];
    for (int i = 0; i < 2; ++i) {
      std::size_t pos = 0;
      std::uint64_t value = 0;
      try {
        value = std::stoull(tokens[i], &pos);
      } catch (const std::exception&) {
        throw ParseError(lineno, "expected node id, got '" + tokens[i] + "'");
      }
      if (pos != tokens[i].size() || tokens[i][0] == '-' ||
          value > std::numeric_limits<NodeId>::max()) {
        throw ParseError(lineno, "expected node id, got '" + tokens[i] + "'");
      }
      ids[i] = static_cast<NodeId>(value);
    }
    out.emplace_back(ids[0], ids[1]);
  }
  return out;
}

namespace {

QueryRow evaluate_query(const Graph& g, const BenchConfig& config, int query_id, NodeId s,
                        NodeId t, Algorithm a, double sp_length) {
  Query q{s, t, config.k, config.theta};
  const auto started = std::chrono::steady_clock::now();
  const ResultSet result = run_algorithm(g, a, q, config.solver);
  const std::chrono::duration<double, std::milli> elapsed =
      std::chrono::steady_clock::now() - started;

  QueryRow row;
  row.query_id = query_id;
  row.source = s;
  row.target = t;
  row.algo = a;
  row.time_ms = elapsed.count();
  row.cardinality = result.cardinality();
  row.collective_length = result.paths.collective_length;
  row.complete = result.complete;
  row.proven = result.proven_optimal;
  row.resource_limited = result.stats.resource_limited;
  if (result.cardinality() > 0 && sp_length > 0.0 && !std::isinf(sp_length)) {
    double sum = 0.0;
    for (const Path& p : result.paths.paths) sum += (p.length() / sp_length - 1.0) * 100.0;
    row.excess_pct = sum / result.cardinality();
  } else {
    row.excess_pct = kNan;
  }
  return row;
}

double median(std::vector<double> values) {
  if (values.empty()) return kNan;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2.0;
}

}  // namespace

BatchResult run_batch(const Graph& g, const BenchConfig& config,
                      std::span<const std::pair<NodeId, NodeId>> pairs) {
  if (config.algorithms.empty()) throw std::invalid_argument("batch: no algorithms enabled");
  for (const auto& [s, t] : pairs) {
    Query{s, t, config.k, config.theta}.validate(g);
  }

  BatchResult batch;
  batch.k = config.k;
  batch.theta = config.theta;
  batch.rows.resize(pairs.size() * config.algorithms.size());

  const int threads = std::max(1, config.threads);
  std::atomic<std::size_t> next_query{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t qi = next_query.fetch_add(1);
      if (qi >= pairs.size()) return;
      const auto [s, t] = pairs[qi];
      // Shortest-path length for the excess metric, outside the timed runs.
      const SpTree tree = dijkstra(g, s, TreeDirection::from_root,
                                   DijkstraBans{{}, nullptr, t});
      const double sp_length = tree.dist[t];
      for (std::size_t ai = 0; ai < config.algorithms.size(); ++ai) {
        batch.rows[qi * config.algorithms.size() + ai] =
            evaluate_query(g, config, static_cast<int>(qi), s, t, config.algorithms[ai],
                           sp_length);
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (Algorithm a : config.algorithms) {
    AlgoAggregate agg;
    agg.algo = a;
    std::vector<double> times;
    double excess_sum = 0.0;
    std::size_t complete_count = 0;
    for (const QueryRow& row : batch.rows) {
      if (row.algo != a) continue;
      ++agg.query_count;
      times.push_back(row.time_ms);
      if (row.complete) {
        ++complete_count;
        excess_sum += row.excess_pct;
      }
    }
    agg.mean_time_ms = times.empty() ? kNan
                                     : std::accumulate(times.begin(), times.end(), 0.0) /
                                           static_cast<double>(times.size());
    agg.median_time_ms = median(times);
    agg.completeness_pct =
        agg.query_count == 0
            ? kNan
            : 100.0 * static_cast<double>(complete_count) / static_cast<double>(agg.query_count);
    agg.avg_excess_pct =
        complete_count == 0 ? kNan : excess_sum / static_cast<double>(complete_count);
    batch.aggregates.push_back(agg);
  }
  return batch;
}

Graph gen_grid(std::uint32_t rows, std::uint32_t cols, std::uint64_t seed) {
  if (rows < 2 || cols < 2) throw std::invalid_argument("grid needs at least 2x2 nodes");
  std::mt19937_64 rng(seed);
  const auto draw_weight = [&] { return static_cast<double>(1 + rng() % 10); };
  std::vector<Edge> edges;
  edges.reserve(2u * (rows * (cols - 1) + (rows - 1) * cols));
  for (std::uint32_t r = 0; r < rows; ++r) {
    for (std::uint32_t c = 0; c < cols; ++c) {
      const NodeId n = r * cols + c;
      if (c + 1 < cols) {
        const double w = draw_weight();
        edges.push_back({n, n + 1, w});
        edges.push_back({n + 1, n, w});
      }
      if (r + 1 < rows) {
        const double w = draw_weight();
        edges.push_back({n, n + cols, w});
        edges.push_back({n + cols, n, w});
      }
    }
  }
  return Graph(rows * cols, std::move(edges));
}

void export_geojson(std::ostream& out, const Graph& g, const PathSet& paths,
                    std::string_view algorithm) {
  if (!g.has_coordinates()) {
    throw std::invalid_argument("geojson export requires node coordinates");
  }
  nlohmann::json features = nlohmann::json::array();
  int rank = 1;
  for (const Path& p : paths.paths) {
    nlohmann::json coords = nlohmann::json::array();
    for (NodeId n : path_nodes(g, p)) {
      const LonLat& c = g.coordinate(n);
      coords.push_back({c.lon, c.lat});
    }
    features.push_back({
        {"type", "Feature"},
        {"geometry", {{"type", "LineString"}, {"coordinates", coords}}},
        {"properties",
         {{"rank", rank}, {"length", p.length()}, {"algorithm", std::string(algorithm)}}},
    });
    ++rank;
  }
  const nlohmann::json doc = {{"type", "FeatureCollection"}, {"features", features}};
  out << doc.dump(2) << '\n';
}

namespace {

void write_csv_double(std::ostream& out, double v) {
  if (std::isnan(v)) return;  // empty field
  std::ostringstream oss;
  oss.precision(12);
  oss << v;
  out << oss.str();
}

nlohmann::json json_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

nlohmann::json row_json(const BatchResult& batch, const QueryRow& row) {
  return {
      {"query_id", row.query_id},
      {"s", row.source},
      {"t", row.target},
      {"algo", algorithm_name(row.algo)},
      {"k", batch.k},
      {"theta", batch.theta},
      {"time_ms", row.time_ms},
      {"cardinality", row.cardinality},
      {"collective_len", row.collective_length},
      {"excess_pct", json_or_null(row.excess_pct)},
      {"complete", row.complete},
      {"proven", row.proven},
      {"resource_limited", row.resource_limited},
  };
}

nlohmann::json aggregate_json(const AlgoAggregate& agg) {
  return {
      {"algo", algorithm_name(agg.algo)},
      {"queries", agg.query_count},
      {"mean_time_ms", json_or_null(agg.mean_time_ms)},
      {"median_time_ms", json_or_null(agg.median_time_ms)},
      {"completeness_pct", json_or_null(agg.completeness_pct)},
      {"avg_excess_pct", json_or_null(agg.avg_excess_pct)},
  };
}

}  // namespace

void write_batch_csv(std::ostream& out, const BatchResult& batch) {
  out << "query_id,s,t,algo,k,theta,time_ms,cardinality,collective_len,excess_pct,complete,"
         "proven\n";
  for (const QueryRow& row : batch.rows) {
    out << row.query_id << ',' << row.source << ',' << row.target << ','
        << algorithm_name(row.algo) << ',' << batch.k << ',' << batch.theta << ',';
    write_csv_double(out, row.time_ms);
    out << ',' << row.cardinality << ',';
    write_csv_double(out, row.collective_length);
    out << ',';
    write_csv_double(out, row.excess_pct);
    out << ',' << (row.complete ? 1 : 0) << ',' << (row.proven ? 1 : 0) << '\n';
  }
  for (const AlgoAggregate& agg : batch.aggregates) {
    out << "# aggregate algo=" << algorithm_name(agg.algo) << " queries=" << agg.query_count
        << " mean_time_ms=";
    write_csv_double(out, agg.mean_time_ms);
    out << " median_time_ms=";
    write_csv_double(out, agg.median_time_ms);
    out << " completeness_pct=";
    write_csv_double(out, agg.completeness_pct);
    out << " avg_excess_pct=";
    write_csv_double(out, agg.avg_excess_pct);
    out << '\n';
  }
}

void write_batch_json(std::ostream& out, const BatchResult& batch) {
  nlohmann::json rows = nlohmann::json::array();
  for (const QueryRow& row : batch.rows) rows.push_back(row_json(batch, row));
  nlohmann::json aggregates = nlohmann::json::array();
  for (const AlgoAggregate& agg : batch.aggregates) aggregates.push_back(aggregate_json(agg));
  const nlohmann::json doc = {
      {"k", batch.k}, {"theta", batch.theta}, {"rows", rows}, {"aggregates", aggregates}};
  out << doc.dump(2) << '\n';
}

namespace {

nlohmann::json result_json(const Graph& g, const Query& q, Algorithm a, const ResultSet& result) {
  nlohmann::json paths = nlohmann::json::array();
  int rank = 1;
  for (const Path& p : result.paths.paths) {
    paths.push_back({{"rank", rank++},
                     {"length", p.length()},
                     {"nodes", path_nodes(g, p)},
                     {"edges", std::vector<EdgeId>(p.edge_ids().begin(), p.edge_ids().end())}});
  }
  nlohmann::json sim = nlohmann::json::array();
  for (const Path& a_path : result.paths.paths) {
    nlohmann::json row = nlohmann::json::array();
    for (const Path& b_path : result.paths.paths) {
      row.push_back(weighted_jaccard(g, a_path, b_path));
    }
    sim.push_back(row);
  }
  return {
      {"query", {{"s", q.source}, {"t", q.target}, {"k", q.k}, {"theta", q.theta}}},
      {"algo", algorithm_name(a)},
      {"paths", paths},
      {"similarity_matrix", sim},
      {"collective_length", result.paths.collective_length},
      {"complete", result.complete},
      {"proven_optimal", result.proven_optimal},
      {"stats",
       {{"paths_generated", result.stats.paths_generated},
        {"subsets_emitted", result.stats.subsets_emitted},
        {"duplicates_skipped", result.stats.duplicates_skipped},
        {"wall_time_ms", result.stats.wall_time.count() * 1e3},
        {"resource_limited", result.stats.resource_limited}}},
  };
}

}  // namespace

void write_single_report_json(std::ostream& out, const Graph& g, const Query& q, Algorithm a,
                              const ResultSet& result) {
  out << result_json(g, q, a, result).dump(2) << '\n';
}

void write_single_report_csv(std::ostream& out, const Graph& g, const Query& q, Algorithm a,
                             const ResultSet& result) {
  const SpTree tree =
      dijkstra(g, q.source, TreeDirection::from_root, DijkstraBans{{}, nullptr, q.target});
  const double sp_length = tree.dist[q.target];
  out << "query_id,s,t,algo,k,theta,time_ms,cardinality,collective_len,excess_pct,complete,"
         "proven\n";
  out << 0 << ',' << q.source << ',' << q.target << ',' << algorithm_name(a) << ',' << q.k << ','
      << q.theta << ',';
  write_csv_double(out, result.stats.wall_time.count() * 1e3);
  out << ',' << result.cardinality() << ',';
  write_csv_double(out, result.paths.collective_length);
  out << ',';
  double excess = kNan;
  if (result.cardinality() > 0 && sp_length > 0.0 && !std::isinf(sp_length)) {
    double sum = 0.0;
    for (const Path& p : result.paths.paths) sum += (p.length() / sp_length - 1.0) * 100.0;
    excess = sum / result.cardinality();
  }
  write_csv_double(out, excess);
  out << ',' << (result.complete ? 1 : 0) << ',' << (result.proven_optimal ? 1 : 0) << '\n';
}

}  // namespace kdpwml
