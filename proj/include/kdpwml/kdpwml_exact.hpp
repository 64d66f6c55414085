#pragma once

// Exact solver for k-dissimilar-paths-with-minimum-collective-length
// queries: among all simple source->target paths, find the pairwise
// dissimilar set (Sim < theta for every pair) of maximum cardinality <= k
// and, among those, minimum collective length.
//
// The solver walks the loopless-KSP stream in length order, generates the
// compatible subsets containing each new path, and terminates when the next
// path's length plus the sum of the k-1 shortest lengths exceeds the
// incumbent's collective length (no later set can be shorter).
//
// brute_force_oracle answers the same question by exhaustive DFS path
// enumeration plus a direct scan of pairwise-compatible subsets. It shares
// nothing with the solver's machinery and exists to check it.

#include <stdexcept>
#include <string>
#include <vector>

#include "kdpwml/graph.hpp"
#include "kdpwml/similarity.hpp"
#include "kdpwml/solver_types.hpp"

namespace kdpwml {

// Returns the maximum-cardinality (<= q.k) pairwise-dissimilar set with
// minimum collective length. Among equal-length optima the set with the
// smallest sorted path signature is returned.
//
// proven_optimal is true iff the run ended through the length bound or true
// path-space exhaustion; a tripped budget or time limit yields the best set
// found so far with proven_optimal = false (never silent truncation).
// An unreachable target yields an empty, proven result.
ResultSet solve_exact(const Graph& g, const Query& q, const SolverOptions& opts,
                      const SimilarityMeasure& measure);
ResultSet solve_exact(const Graph& g, const Query& q, const SolverOptions& opts = {});

inline constexpr std::size_t kDefaultOraclePathCap = 5'000;

class PathCapError : public std::runtime_error {
 public:
  explicit PathCapError(std::size_t cap)
      : std::runtime_error("simple-path enumeration exceeded cap of " + std::to_string(cap)) {}
};

// Every simple source->target path, by exhaustive DFS, in deterministic
// (length, node-sequence, arc-sequence) order. Throws PathCapError when more
// than path_cap paths exist.
std::vector<Path> enumerate_simple_paths(const Graph& g, NodeId source, NodeId target,
                                         std::size_t path_cap);

// Reference answer over the full enumerated path space; same result contract
// and tie-break as solve_exact. Intended for small graphs only.
ResultSet brute_force_oracle(const Graph& g, const Query& q,
                             std::size_t path_cap, const SimilarityMeasure& measure);
ResultSet brute_force_oracle(const Graph& g, const Query& q,
                             std::size_t path_cap = kDefaultOraclePathCap);

}  // namespace kdpwml
