#include "kdpwml/ssvp.hpp"

#include <algorithm>
#include <chrono>

#include "detail/subset_search.hpp"

namespace kdpwml {

SsvpIterator::SsvpIterator(const Graph& g, NodeId source, NodeId target)
    : graph_(&g),
      source_(source),
      target_(target),
      tree_from_source_(dijkstra(g, source, TreeDirection::from_root)),
      tree_to_target_(dijkstra(g, target, TreeDirection::to_root)),
      ban_mask_(g.node_count(), 0) {
  if (source == target) throw std::invalid_argument("ssvp: source equals target");
  shortest_ = extract_path(g, tree_from_source_, target);
  if (!shortest_) return;

  std::vector<char> on_sp(g.node_count(), 0);
  for (NodeId n : path_nodes(g, *shortest_)) on_sp[n] = 1;

  for (NodeId n = 0; n < g.node_count(); ++n) {
    if (n == source || n == target || on_sp[n]) continue;
    if (!tree_from_source_.reachable(n) || !tree_to_target_.reachable(n)) continue;
    Entry entry;
    entry.length = tree_from_source_.dist[n] + tree_to_target_.dist[n];
    entry.via = n;
    queue_.push(std::move(entry));
  }
}

std::optional<SsvpIterator::Entry> SsvpIterator::repair(NodeId via) {
  const Graph& g = *graph_;
  const Path to_via = *extract_path(g, tree_from_source_, via);
  const Path from_via = *extract_path(g, tree_to_target_, via);

  auto banned_search = [&](const Path& fixed_half, NodeId root,
                           NodeId goal) -> std::optional<Path> {
    for (NodeId n : path_nodes(g, fixed_half)) ban_mask_[n] = 1;
    ban_mask_[via] = 0;  // only the via node survives from the fixed half
    DijkstraBans bans;
    bans.nodes = ban_mask_;
    bans.stop_at = goal;
    const SpTree tree = dijkstra(g, root, TreeDirection::from_root, bans);
    auto found = extract_path(g, tree, goal);
    for (NodeId n : path_nodes(g, fixed_half)) ban_mask_[n] = 0;
    return found;
  };

  // Candidate 1 keeps sp(s->via) and recomputes via->t in the graph without
  // the kept half's nodes; candidate 2 is the mirror image.
  std::optional<Concatenation> cand1;
  if (auto tail = banned_search(to_via, via, target_)) {
    cand1 = concat(g, to_via, *tail);
  }
  std::optional<Concatenation> cand2;
  if (auto head = banned_search(from_via, source_, via)) {
    cand2 = concat(g, *head, from_via);
  }

  const Concatenation* chosen = nullptr;
  if (cand1 && cand2) {
    if (cand1->length < cand2->length) {
      chosen = &*cand1;
    } else if (cand2->length < cand1->length) {
      chosen = &*cand2;
    } else {
      // Equal-length candidates: smallest node sequence, then arc sequence.
      const auto n1 = path_nodes(g, cand1->edge_ids);
      const auto n2 = path_nodes(g, cand2->edge_ids);
      if (n1 != n2) {
        chosen = n1 < n2 ? &*cand1 : &*cand2;
      } else {
        chosen = cand1->edge_ids <= cand2->edge_ids ? &*cand1 : &*cand2;
      }
    }
  } else if (cand1) {
    chosen = &*cand1;
  } else if (cand2) {
    chosen = &*cand2;
  } else {
    return std::nullopt;  // via node has no simple s->t route left
  }
  return Entry{chosen->length, via, chosen->edge_ids, true, true, true};
}

std::optional<Path> SsvpIterator::next() {
  if (!shortest_emitted_) {
    shortest_emitted_ = true;
    if (!shortest_) return std::nullopt;
    ++emitted_;
    last_via_.reset();
    return shortest_;
  }
  while (!queue_.empty()) {
    Entry top = queue_.top();
    queue_.pop();
    if (!top.materialized) {
      const Path to_via = *extract_path(*graph_, tree_from_source_, top.via);
      const Path from_via = *extract_path(*graph_, tree_to_target_, top.via);
      Concatenation joined = concat(*graph_, to_via, from_via);
      top.materialized = true;
      top.simple = joined.simple;
      top.edge_ids = std::move(joined.edge_ids);
    }
    if (top.simple) {
      ++emitted_;
      last_via_ = top.via;
      return Path::with_length(*graph_, std::move(top.edge_ids), top.length);
    }
    if (auto repaired = repair(top.via)) queue_.push(std::move(*repaired));
  }
  return std::nullopt;
}

ResultSet solve_svp_d(const Graph& g, const Query& q, const SolverOptions& opts,
                      const SimilarityMeasure& measure) {
  q.validate(g);
  SsvpIterator stream(g, q.source, q.target);
  return detail::subset_search(g, q, opts, measure, stream);
}

ResultSet solve_svp_d(const Graph& g, const Query& q, const SolverOptions& opts) {
  return solve_svp_d(g, q, opts, WeightedJaccard(g));
}

ResultSet solve_ssvp_d_plus(const Graph& g, const Query& q, const SimilarityMeasure& measure) {
  q.validate(g);
  const auto started = std::chrono::steady_clock::now();
  SsvpIterator stream(g, q.source, q.target);
  ResultSet result;
  std::vector<Path> accepted;
  while (static_cast<int>(accepted.size()) < q.k) {
    auto p = stream.next();
    if (!p) break;
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

ResultSet solve_ssvp_d_plus(const Graph& g, const Query& q) {
  return solve_ssvp_d_plus(g, q, WeightedJaccard(g));
}

}  // namespace kdpwml
