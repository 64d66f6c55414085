#include "kdpwml/kdpwml_exact.hpp"

#include <algorithm>
#include <chrono>

#include "detail/subset_search.hpp"
#include "kdpwml/shortest_path.hpp"

namespace kdpwml {

ResultSet solve_exact(const Graph& g, const Query& q, const SolverOptions& opts,
                      const SimilarityMeasure& measure) {
  q.validate(g);
  KspIterator stream(g, q.source, q.target, opts.ksp_budget);
  return detail::subset_search(g, q, opts, measure, stream);
}

ResultSet solve_exact(const Graph& g, const Query& q, const SolverOptions& opts) {
  return solve_exact(g, q, opts, WeightedJaccard(g));
}

std::vector<Path> enumerate_simple_paths(const Graph& g, NodeId source, NodeId target,
                                         std::size_t path_cap) {
  if (source >= g.node_count() || target >= g.node_count()) {
    throw std::out_of_range("enumerate_simple_paths: node out of range");
  }
  std::vector<Path> out;
  std::vector<EdgeId> stack;
  std::vector<char> on_path(g.node_count(), 0);

  auto dfs = [&](auto&& self, NodeId at) -> void {
    if (at == target) {
      if (out.size() >= path_cap) throw PathCapError(path_cap);
      out.emplace_back(g, stack);
      return;
    }
    on_path[at] = 1;
    for (EdgeId id : g.out_edges(at)) {
      const NodeId next = g.edge(id).head;
      if (on_path[next] || (next == source)) continue;
      stack.push_back(id);
      self(self, next);
      stack.pop_back();
    }
    on_path[at] = 0;
  };
  if (source != target) dfs(dfs, source);
  std::sort(out.begin(), out.end(), PathOrder{&g});
  return out;
}

namespace {

// Recursively extends `members` (indices into `paths`, ascending) with every
// compatible path, visiting exactly the pairwise-compatible subsets of
// cardinality <= k; each one is a candidate for the best set.
struct OracleScan {
  const Graph& g;
  const std::vector<Path>& paths;
  const std::vector<std::vector<char>>& compat;
  int k;

  std::vector<std::size_t> members;
  std::vector<std::size_t> best;
  double best_length = 0.0;

  void consider_current(double length) {
    if (members.size() < best.size()) return;
    if (members.size() > best.size() || length < best_length) {
      best = members;
      best_length = length;
      return;
    }
    if (length == best_length) {
      // Members are index-ascending; with paths pre-sorted this is also the
      // signature order.
      if (members < best) best = members;
    }
  }

  void extend(std::size_t start, double length) {
    consider_current(length);
    if (members.size() == static_cast<std::size_t>(k)) return;
    for (std::size_t i = start; i < paths.size(); ++i) {
      bool ok = true;
      for (std::size_t m : members) {
        if (!compat[m][i]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      members.push_back(i);
      extend(i + 1, length + paths[i].length());
      members.pop_back();
    }
  }
};

}  // namespace

ResultSet brute_force_oracle(const Graph& g, const Query& q, std::size_t path_cap,
                             const SimilarityMeasure& measure) {
  q.validate(g);
  const auto started = std::chrono::steady_clock::now();
  const std::vector<Path> paths = enumerate_simple_paths(g, q.source, q.target, path_cap);

  std::vector<std::vector<char>> compat(paths.size(), std::vector<char>(paths.size(), 0));
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      compat[i][j] = compat[j][i] = measure(paths[i], paths[j]) < q.theta ? 1 : 0;
    }
  }

  OracleScan scan{g, paths, compat, q.k, {}, {}, 0.0};
  scan.extend(0, 0.0);

  std::vector<Path> chosen;
  chosen.reserve(scan.best.size());
  for (std::size_t i : scan.best) chosen.push_back(paths[i]);

  ResultSet result;
  result.paths = make_path_set(std::move(chosen));
  result.complete = result.cardinality() == q.k;
  result.proven_optimal = true;
  result.stats.paths_generated = paths.size();
  result.stats.wall_time = std::chrono::steady_clock::now() - started;
  return result;
}

ResultSet brute_force_oracle(const Graph& g, const Query& q, std::size_t path_cap) {
  return brute_force_oracle(g, q, path_cap, WeightedJaccard(g));
}

}  // namespace kdpwml
