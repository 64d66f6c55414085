#pragma once

// Dijkstra single-source trees and a lazy loopless K-shortest-paths iterator
// (Yen's algorithm). Spur searches reuse Dijkstra with node and arc ban
// masks instead of copying the graph.
//
// Determinism: Dijkstra breaks parent ties by smallest arc id; the KSP
// stream breaks length ties by node sequence, then by arc-id sequence.

#include <cstddef>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <unordered_set>
#include <vector>

#include "kdpwml/graph.hpp"

namespace kdpwml {

inline constexpr double kInfiniteDistance = std::numeric_limits<double>::infinity();
inline constexpr EdgeId kNoParentEdge = static_cast<EdgeId>(-1);
inline constexpr std::size_t kDefaultKspBudget = 1'000'000;

enum class TreeDirection {
  from_root,  // distances root -> n over forward arcs
  to_root,    // distances n -> root over reverse adjacency
};

struct SpTree {
  NodeId root = 0;
  TreeDirection direction = TreeDirection::from_root;
  std::vector<double> dist;          // kInfiniteDistance if unreachable
  std::vector<EdgeId> parent_edge;   // kNoParentEdge at the root / unreachable

  bool reachable(NodeId n) const { return dist[n] != kInfiniteDistance; }
};

struct DijkstraBans {
  // Per-node mask, size node_count (or empty for none). Banned nodes are
  // never settled; a banned root yields an all-unreachable tree.
  std::span<const char> nodes;
  const std::unordered_set<EdgeId>* edges = nullptr;
  // Stop as soon as this node is settled (its distance is then final).
  std::optional<NodeId> stop_at;
};

SpTree dijkstra(const Graph& g, NodeId root, TreeDirection direction);
SpTree dijkstra(const Graph& g, NodeId root, TreeDirection direction, const DijkstraBans& bans);

// Root<->n path encoded in the tree: root->n for from_root trees, n->root
// for to_root trees. std::nullopt when unreachable; the root itself yields
// the empty path.
std::optional<Path> extract_path(const Graph& g, const SpTree& tree, NodeId n);

// Lazy iterator over all simple source->target paths in nondecreasing length
// order. Single consumer; independent iterators over a shared Graph may run
// concurrently.
class KspIterator {
 public:
  KspIterator(const Graph& g, NodeId source, NodeId target,
              std::size_t budget = kDefaultKspBudget);

  // The i-th call returns the i-th loopless shortest path; std::nullopt once
  // the path space or the emission budget is exhausted.
  std::optional<Path> next();

  // True when the stream stopped because of the budget while candidate paths
  // remained, i.e. completeness of the enumeration is unproven.
  bool budget_exhausted() const noexcept { return budget_hit_; }

  std::size_t emitted() const noexcept { return emitted_paths_.size(); }

 private:
  struct Candidate {
    Path path;
    std::vector<NodeId> nodes;
  };
  struct CandidateOrder {
    const Graph* g;
    bool operator()(const Candidate& a, const Candidate& b) const;
  };

  void generate_spur_candidates(std::size_t base_index);
  std::optional<Path> emit(Path p);

  const Graph* graph_;
  NodeId source_;
  NodeId target_;
  std::size_t budget_;
  bool primed_ = false;
  bool done_ = false;
  bool budget_hit_ = false;
  std::vector<Path> emitted_paths_;
  std::vector<std::vector<NodeId>> emitted_nodes_;
  std::set<Candidate, CandidateOrder> candidates_;
  std::vector<char> ban_mask_;  // scratch, size node_count
};

}  // namespace kdpwml
