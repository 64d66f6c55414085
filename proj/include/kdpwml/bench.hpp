#pragma once

// Benchmark harness: seeded random query batches over a shared graph, one
// row per (query, algorithm) with timing and quality metrics, plus a
// synthetic grid-graph generator and GeoJSON export.
//
// Determinism contract: a fixed graph, seed, and configuration produce the
// same query list, the same per-query results, and byte-identical CSV
// output except for the timing columns, regardless of the thread count.
// (Per-query time limits trade this away: truncation then depends on the
// clock. Leave time_limit unset when reproducibility matters.)

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "kdpwml/graph.hpp"
#include "kdpwml/solver_types.hpp"

namespace kdpwml {

enum class Algorithm {
  exact,       // KSP stream + subset search, provably optimal when not truncated
  svpd,        // SSVP stream + subset search
  ssvpd_plus,  // SSVP stream, greedy
  greedy_ksp,  // KSP stream, greedy
};

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::exact, Algorithm::svpd,
                                               Algorithm::ssvpd_plus, Algorithm::greedy_ksp};

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

ResultSet run_algorithm(const Graph& g, Algorithm a, const Query& q, const SolverOptions& opts);

struct BenchConfig {
  std::vector<Algorithm> algorithms{std::begin(kAllAlgorithms), std::end(kAllAlgorithms)};
  int k = 3;
  double theta = 0.5;
  SolverOptions solver;
  int threads = 1;
};

struct QueryRow {
  int query_id = 0;
  NodeId source = 0;
  NodeId target = 0;
  Algorithm algo = Algorithm::exact;
  double time_ms = 0.0;
  int cardinality = 0;
  double collective_length = 0.0;
  // Mean over the result paths of (len(p) / len(sp) - 1) * 100; NaN when the
  // result is empty. Batch aggregation uses only complete rows.
  double excess_pct = 0.0;
  bool complete = false;
  bool proven = false;
  bool resource_limited = false;
};

struct AlgoAggregate {
  Algorithm algo = Algorithm::exact;
  std::size_t query_count = 0;
  double mean_time_ms = 0.0;
  double median_time_ms = 0.0;
  double completeness_pct = 0.0;    // share of queries with exactly k paths
  double avg_excess_pct = 0.0;      // over complete queries; NaN if none
};

struct BatchResult {
  int k = 3;
  double theta = 0.5;
  std::vector<QueryRow> rows;  // query-major, algorithm order as configured
  std::vector<AlgoAggregate> aggregates;
};

// Uniform ordered node pairs with s != t and t reachable from s, drawn from
// a seeded PRNG; the same seed always yields the same list.
std::vector<std::pair<NodeId, NodeId>> draw_random_queries(const Graph& g, std::size_t count,
                                                           std::uint64_t seed);

// Query file: one "s t" pair per line, 0-based ids, '#' comments.
std::vector<std::pair<NodeId, NodeId>> load_query_file(std::istream& in);

// Runs every configured algorithm on every query pair. Pairs must be valid
// for the graph (throws std::invalid_argument otherwise). Queries may be
// evaluated concurrently (config.threads); rows come back in query order.
BatchResult run_batch(const Graph& g, const BenchConfig& config,
                      std::span<const std::pair<NodeId, NodeId>> pairs);

// 4-connected rows x cols grid; every undirected edge becomes two opposing
// arcs sharing one integer weight in [1, 10] from the seeded PRNG.
Graph gen_grid(std::uint32_t rows, std::uint32_t cols, std::uint64_t seed);

// GeoJSON FeatureCollection with one LineString per path, properties
// {rank, length, algorithm}. Throws std::invalid_argument when the graph has
// no coordinates.
void export_geojson(std::ostream& out, const Graph& g, const PathSet& paths,
                    std::string_view algorithm);

// CSV: fixed column set (query_id, s, t, algo, k, theta, time_ms,
// cardinality, collective_len, excess_pct, complete, proven), one row per
// (query, algorithm), aggregates appended as '#' comment lines.
void write_batch_csv(std::ostream& out, const BatchResult& batch);
void write_batch_json(std::ostream& out, const BatchResult& batch);

// Full single-query report: node sequences, lengths, pairwise similarity
// matrix, collective length, flags, and stats.
void write_single_report_json(std::ostream& out, const Graph& g, const Query& q, Algorithm a,
                              const ResultSet& result);
void write_single_report_csv(std::ostream& out, const Graph& g, const Query& q, Algorithm a,
                             const ResultSet& result);

}  // namespace kdpwml
