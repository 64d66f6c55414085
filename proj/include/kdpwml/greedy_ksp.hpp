#pragma once

// Greedy baseline over the loopless KSP stream: the shortest path is always
// accepted, and every following path is accepted iff it is dissimilar to all
// paths accepted so far. Each accepted path is therefore the shortest path
// dissimilar to the ones before it. Stops at k accepted paths, stream end,
// or the budget / time limit (resource_limited is then set and the best set
// so far returned). proven_optimal is always false: the greedy set carries
// no collective-length optimality claim.

#include "kdpwml/graph.hpp"
#include "kdpwml/similarity.hpp"
#include "kdpwml/solver_types.hpp"

namespace kdpwml {

ResultSet solve_greedy_ksp(const Graph& g, const Query& q, const SolverOptions& opts,
                           const SimilarityMeasure& measure);
ResultSet solve_greedy_ksp(const Graph& g, const Query& q, const SolverOptions& opts = {});

}  // namespace kdpwml
