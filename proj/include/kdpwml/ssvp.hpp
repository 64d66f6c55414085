#pragma once

// Simple single-via paths and the two heuristics built on them.
//
// The single-via path of a node n is sp(s->n) concatenated with sp(n->t),
// the shortest s->t path through n; it may revisit nodes. The simple
// single-via path (SSVP) of n is defined for nodes off the shortest path: it
// is the single-via path itself when simple, otherwise the cheaper of two
// repairs, each keeping one half fixed and recomputing the other half in the
// graph without the fixed half's nodes (so the repair is simple by
// construction). The shortest path itself counts as the first SSVP.
//
// SsvpIterator yields the SSVPs in nondecreasing length order: via nodes are
// queued by single-via length; a repaired path is at least as long as the
// single-via path it replaces, so re-queueing it preserves global order.
// At most node_count - 1 paths are ever emitted and no via node twice.
//
// SVP-D runs the exact solver's subset search over this stream (its
// proven_optimal flag refers to optimality within the SSVP universe).
// SSVP-D+ greedily accepts each SSVP that is dissimilar to all accepted
// ones, stopping at k.

#include <optional>
#include <queue>
#include <vector>

#include "kdpwml/graph.hpp"
#include "kdpwml/shortest_path.hpp"
#include "kdpwml/similarity.hpp"
#include "kdpwml/solver_types.hpp"

namespace kdpwml {

class SsvpIterator {
 public:
  // Builds both shortest-path trees and queues every via node with a finite
  // s->n and n->t distance that is not crossed by the shortest path.
  SsvpIterator(const Graph& g, NodeId source, NodeId target);

  // First call returns the shortest path (std::nullopt if the target is
  // unreachable); later calls return the next SSVP by length until the via
  // queue empties. Length ties pop by via-node id.
  std::optional<Path> next();

  std::size_t emitted() const noexcept { return emitted_; }
  bool budget_exhausted() const noexcept { return false; }  // stream is finite

  // Via node of the most recent emission; empty for the shortest path (which
  // has no via) or before the first call.
  std::optional<NodeId> last_via() const noexcept { return last_via_; }

 private:
  // Queue entries are keyed by single-via length (tree distances); the
  // concatenated arc sequence is materialized lazily on first pop, so a
  // query that stops early never builds paths for the rest of the queue.
  struct Entry {
    double length = 0.0;
    NodeId via = 0;
    std::vector<EdgeId> edge_ids;
    bool materialized = false;
    bool simple = false;
    bool repaired = false;
  };
  struct EntryOrder {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.length != b.length) return a.length > b.length;
      return a.via > b.via;
    }
  };

  // Cheapest simple repair of a non-simple single-via concatenation, or
  // std::nullopt when neither half can be completed after the removals.
  std::optional<Entry> repair(NodeId via);

  const Graph* graph_;
  NodeId source_;
  NodeId target_;
  SpTree tree_from_source_;
  SpTree tree_to_target_;
  std::optional<Path> shortest_;
  bool shortest_emitted_ = false;
  std::priority_queue<Entry, std::vector<Entry>, EntryOrder> queue_;
  std::vector<char> ban_mask_;  // scratch, size node_count
  std::size_t emitted_ = 0;
  std::optional<NodeId> last_via_;
};

// Subset search over the SSVP stream. proven_optimal means the result is
// optimal among subsets of the SSVP universe (length bound fired or the
// stream was exhausted without tripping a budget or the time limit).
ResultSet solve_svp_d(const Graph& g, const Query& q, const SolverOptions& opts,
                      const SimilarityMeasure& measure);
ResultSet solve_svp_d(const Graph& g, const Query& q, const SolverOptions& opts = {});

// Greedy over the SSVP stream: the shortest path is always accepted; each
// following SSVP is accepted iff dissimilar to all accepted paths; stops at
// k accepted or stream end. Makes no optimality claim (proven_optimal is
// always false).
ResultSet solve_ssvp_d_plus(const Graph& g, const Query& q, const SimilarityMeasure& measure);
ResultSet solve_ssvp_d_plus(const Graph& g, const Query& q);

}  // namespace kdpwml
