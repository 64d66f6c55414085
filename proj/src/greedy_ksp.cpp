#include "kdpwml/greedy_ksp.hpp"

#include <algorithm>
#include <chrono>

#include "kdpwml/shortest_path.hpp"

namespace kdpwml {

ResultSet solve_greedy_ksp(const Graph& g, const Query& q, const SolverOptions& opts,
                           const SimilarityMeasure& measure) {
  q.validate(g);
  const auto started = std::chrono::steady_clock::now();
  const auto deadline = opts.time_limit
                            ? std::optional(started + *opts.time_limit)
                            : std::optional<std::chrono::steady_clock::time_point>();

  KspIterator stream(g, q.source, q.target, opts.ksp_budget);
  ResultSet result;
  std::vector<Path> accepted;
  while (static_cast<int>(accepted.size()) < q.k) {
    if (deadline && std::chrono::steady_clock::now() > *deadline) {
      result.stats.resource_limited = true;
      break;
    }
    auto p = stream.next();
    if (!p) {
      result.stats.resource_limited = stream.budget_exhausted();
      break;
    }
    ++result.stats.paths_generated;
    if (dissimilar_to_set(*p, accepted, q.theta, measure)) accepted.push_back(std::move(*p));
  }
  std::sort(accepted.begin(), accepted.end(), PathOrder{&g});
  result.paths = make_path_set(std::move(accepted));
  result.complete = result.cardinality() == q.k;
  result.proven_optimal = false;
  result.stats.wall_time = std::chrono::steady_clock::now() - started;
  return result;
}

ResultSet solve_greedy_ksp(const Graph& g, const Query& q, const SolverOptions& opts) {
  return solve_greedy_ksp(g, q, opts, WeightedJaccard(g));
}

}  // namespace kdpwml
