#pragma once

// Shared control flow of the exact solver and SVP-D: draw paths from a
// stream in nondecreasing length order, feed them through the subset
// enumerator, track the best subset under (max cardinality, min collective
// length, smallest signature), and stop once the incumbent can no longer be
// beaten.
//
// Loop guard, with L_{k-1} the sum of the k-1 shortest stream lengths:
// continue while |best| < k or len(p) + L_{k-1} <= L(best). Once the best
// set holds k paths, any set containing a path p with
// len(p) + L_{k-1} > L(best) is collectively longer than the incumbent, so
// the stream (nondecreasing) can be cut.
//
// The Stream concept: std::optional<Path> next(); bool budget_exhausted().

#include <algorithm>
#include <chrono>
#include <optional>
#include <vector>

#include "kdpwml/graph.hpp"
#include "kdpwml/similarity.hpp"
#include "kdpwml/solver_types.hpp"
#include "kdpwml/subset_enum.hpp"

namespace kdpwml::detail {

inline std::vector<const Path*> sorted_members(const Graph& g, const SubsetEnumerator& en,
                                               std::span<const std::uint32_t> ids) {
  std::vector<const Path*> out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(&en.path(id));
  std::sort(out.begin(), out.end(),
            [&](const Path* x, const Path* y) { return compare_paths(g, *x, *y) < 0; });
  return out;
}

// Deterministic tie-break among equal-cardinality, exactly-equal-length
// subsets: element-wise comparison of the length-sorted members.
inline bool signature_less(const Graph& g, const std::vector<const Path*>& a,
                           const std::vector<const Path*>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const int c = compare_paths(g, *a[i], *b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

template <typename Stream>
ResultSet subset_search(const Graph& g, const Query& q, const SolverOptions& opts,
                        const SimilarityMeasure& measure, Stream& stream) {
  q.validate(g);
  const auto started = std::chrono::steady_clock::now();
  const auto deadline = opts.time_limit
                            ? std::optional(started + *opts.time_limit)
                            : std::optional<std::chrono::steady_clock::time_point>();

  SubsetEnumerator enumerator(q.k, q.theta, measure, opts.subset_budget);
  ResultSet result;
  std::vector<std::uint32_t> best_ids;
  double best_length = 0.0;

  double prefix_sum = 0.0;  // L_{k-1}
  bool proven = false;
  bool resource_limited = false;

  for (;;) {
    if (deadline && std::chrono::steady_clock::now() > *deadline) {
      resource_limited = true;
      break;
    }
    auto p = stream.next();
    if (!p) {
      resource_limited = stream.budget_exhausted();
      proven = !resource_limited;
      break;
    }
    ++result.stats.paths_generated;
    if (!opts.disable_length_bound_termination && static_cast<int>(best_ids.size()) == q.k &&
        p->length() + prefix_sum > best_length) {
      proven = true;
      break;
    }
    if (enumerator.contains(*p)) {
      ++result.stats.duplicates_skipped;
      continue;
    }
    const double len = p->length();
    try {
      enumerator.add_path(std::move(*p), [&](std::span<const std::uint32_t> subset) {
        if (subset.size() < best_ids.size()) return;
        double subset_length = 0.0;
        for (auto id : subset) subset_length += enumerator.path(id).length();
        if (subset.size() > best_ids.size() || subset_length < best_length) {
          best_ids.assign(subset.begin(), subset.end());
          best_length = subset_length;
        } else if (subset_length == best_length &&
                   signature_less(g, sorted_members(g, enumerator, subset),
                                  sorted_members(g, enumerator, best_ids))) {
          best_ids.assign(subset.begin(), subset.end());
        }
      });
    } catch (const SubsetBudgetError&) {
      resource_limited = true;
      break;
    }
    if (static_cast<int>(enumerator.path_count()) < q.k) prefix_sum += len;
  }

  std::vector<Path> paths;
  paths.reserve(best_ids.size());
  for (auto id : best_ids) paths.push_back(enumerator.path(id));
  std::sort(paths.begin(), paths.end(), PathOrder{&g});
  result.paths = make_path_set(std::move(paths));
  result.complete = result.cardinality() == q.k;
  result.proven_optimal = proven;
  result.stats.subsets_emitted = enumerator.emitted_count();
  result.stats.lower_bound_prefix_sum = prefix_sum;
  result.stats.resource_limited = resource_limited;
  result.stats.wall_time = std::chrono::steady_clock::now() - started;
  return result;
}

}  // namespace kdpwml::detail
