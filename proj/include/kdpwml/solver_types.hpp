#pragma once

// Query / options / result types shared by every solver.

#include <chrono>
#include <cstddef>
#include <optional>

#include "kdpwml/graph.hpp"
#include "kdpwml/shortest_path.hpp"
#include "kdpwml/subset_enum.hpp"

namespace kdpwml {

struct Query {
  NodeId source = 0;
  NodeId target = 0;
  int k = 1;          // number of requested paths, >= 1
  double theta = 0.5; // similarity threshold, in (0, 1]

  // Throws std::invalid_argument on violated invariants (s == t, k < 1,
  // theta outside (0, 1], ids out of range).
  void validate(const Graph& g) const;
};

struct SolverOptions {
  std::size_t ksp_budget = kDefaultKspBudget;       // max paths drawn from a KSP stream
  std::size_t subset_budget = kDefaultSubsetBudget; // max stored compatible subsets
  std::optional<std::chrono::milliseconds> time_limit;
  // Debug switch: ignore the length lower bound and run the stream to
  // exhaustion or budget. Changes work done, never the result.
  bool disable_length_bound_termination = false;
};

struct SolveStats {
  std::size_t paths_generated = 0;   // paths drawn from the underlying stream
  std::size_t subsets_emitted = 0;
  std::size_t duplicates_skipped = 0;
  // Sum of the k-1 shortest stream lengths, the fixed part of the
  // termination lower bound.
  double lower_bound_prefix_sum = 0.0;
  std::chrono::duration<double> wall_time{0.0};
  bool resource_limited = false;  // a budget or the time limit cut the run short
};

struct ResultSet {
  PathSet paths;               // pairwise dissimilar, sorted deterministically
  bool complete = false;       // exactly k paths found
  bool proven_optimal = false; // see each solver's contract
  SolveStats stats;

  int cardinality() const noexcept { return static_cast<int>(paths.paths.size()); }
};

}  // namespace kdpwml
