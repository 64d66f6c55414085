#include "kdpwml/shortest_path.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <utility>

namespace kdpwml {

namespace {

using HeapItem = std::pair<double, NodeId>;  // (distance, node); node id breaks ties

bool node_banned(const DijkstraBans& bans, NodeId n) {
  return !bans.nodes.empty() && bans.nodes[n];
}

bool edge_banned(const DijkstraBans& bans, EdgeId e) {
  return bans.edges != nullptr && bans.edges->count(e) > 0;
}

}  // namespace

SpTree dijkstra(const Graph& g, NodeId root, TreeDirection direction) {
  return dijkstra(g, root, direction, DijkstraBans{});
}

SpTree dijkstra(const Graph& g, NodeId root, TreeDirection direction, const DijkstraBans& bans) {
  if (root >= g.node_count()) throw std::out_of_range("dijkstra: root out of range");
  SpTree tree;
  tree.root = root;
  tree.direction = direction;
  tree.dist.assign(g.node_count(), kInfiniteDistance);
  tree.parent_edge.assign(g.node_count(), kNoParentEdge);
  if (node_banned(bans, root)) return tree;

  std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;
  tree.dist[root] = 0.0;
  heap.push({0.0, root});
  const bool forward = direction == TreeDirection::from_root;
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > tree.dist[u]) continue;  // stale entry
    if (bans.stop_at && *bans.stop_at == u) break;
    for (EdgeId id : forward ? g.out_edges(u) : g.in_edges(u)) {
      if (edge_banned(bans, id)) continue;
      const Edge& e = g.edge(id);
      const NodeId v = forward ? e.head : e.tail;
      if (node_banned(bans, v)) continue;
      const double nd = d + e.weight;
      if (nd < tree.dist[v]) {
        tree.dist[v] = nd;
        tree.parent_edge[v] = id;
        heap.push({nd, v});
      } else if (nd == tree.dist[v] && id < tree.parent_edge[v]) {
        tree.parent_edge[v] = id;  // smallest arc id wins under exact ties
      }
    }
  }
  return tree;
}

std::optional<Path> extract_path(const Graph& g, const SpTree& tree, NodeId n) {
  if (n >= g.node_count()) throw std::out_of_range("extract_path: node out of range");
  if (!tree.reachable(n)) return std::nullopt;
  std::vector<EdgeId> ids;
  NodeId cur = n;
  while (cur != tree.root) {
    const EdgeId id = tree.parent_edge[cur];
    ids.push_back(id);
    cur = tree.direction == TreeDirection::from_root ? g.edge(id).tail : g.edge(id).head;
    if (ids.size() > g.node_count()) throw std::logic_error("extract_path: malformed tree");
  }
  if (tree.direction == TreeDirection::from_root) std::reverse(ids.begin(), ids.end());
  return Path(g, std::move(ids));
}

bool KspIterator::CandidateOrder::operator()(const Candidate& a, const Candidate& b) const {
  if (a.path.length() != b.path.length()) return a.path.length() < b.path.length();
  if (a.nodes != b.nodes) return a.nodes < b.nodes;
  return std::ranges::lexicographical_compare(a.path.edge_ids(), b.path.edge_ids());
}

// Lexicographically smallest shortest path from `from` towards the root of a
// to-root distance map: walk forward, always taking the smallest next node
// (then smallest arc id) that lies on some shortest continuation. Exact
// distance equality identifies optimal arcs; a shortest path in a positively
// weighted graph cannot revisit a node, so the walk is simple and finite.
std::optional<Path> lex_min_path(const Graph& g, NodeId from, const SpTree& to_target,
                                 const DijkstraBans& bans) {
  if (!to_target.reachable(from)) return std::nullopt;
  std::vector<EdgeId> ids;
  NodeId cur = from;
  while (cur != to_target.root) {
    EdgeId best_edge = kNoParentEdge;
    NodeId best_next = 0;
    for (EdgeId id : g.out_edges(cur)) {
      if (bans.edges != nullptr && bans.edges->count(id) > 0) continue;
      const Edge& e = g.edge(id);
      if (!bans.nodes.empty() && bans.nodes[e.head]) continue;
      if (!to_target.reachable(e.head)) continue;
      if (e.weight + to_target.dist[e.head] != to_target.dist[cur]) continue;
      if (best_edge == kNoParentEdge || e.head < best_next ||
          (e.head == best_next && id < best_edge)) {
        best_edge = id;
        best_next = e.head;
      }
    }
    if (best_edge == kNoParentEdge) throw std::logic_error("lex_min_path: broken distance map");
    ids.push_back(best_edge);
    cur = best_next;
    if (ids.size() > g.node_count()) throw std::logic_error("lex_min_path: walk did not end");
  }
  return Path(g, std::move(ids));
}

KspIterator::KspIterator(const Graph& g, NodeId source, NodeId target, std::size_t budget)
    : graph_(&g),
      source_(source),
      target_(target),
      budget_(budget),
      candidates_(CandidateOrder{&g}),
      ban_mask_(g.node_count(), 0) {
  if (source >= g.node_count() || target >= g.node_count()) {
    throw std::out_of_range("ksp: node out of range");
  }
  if (source == target) throw std::invalid_argument("ksp: source equals target");
  if (budget == 0) throw std::invalid_argument("ksp: budget must be >= 1");
}

std::optional<Path> KspIterator::emit(Path p) {
  emitted_nodes_.push_back(path_nodes(*graph_, p));
  emitted_paths_.push_back(std::move(p));
  return emitted_paths_.back();
}

// Spur candidates derived from emitted path #base_index, one per prefix.
// A spur search bans the prefix nodes (so the full path stays simple) and,
// at the spur node, every arc already used at that position by an emitted
// path sharing the same arc prefix (so no emitted path is rediscovered).
void KspIterator::generate_spur_candidates(std::size_t base_index) {
  const Path& base = emitted_paths_[base_index];
  const auto& base_nodes = emitted_nodes_[base_index];
  const auto base_edges = base.edge_ids();

  // Emitted paths whose arc prefix [0, i) matches the base path's; shrinks
  // as i grows.
  std::vector<std::size_t> prefix_matches(emitted_paths_.size());
  for (std::size_t j = 0; j < prefix_matches.size(); ++j) prefix_matches[j] = j;

  std::unordered_set<EdgeId> banned_edges;
  for (std::size_t i = 0; i < base_edges.size(); ++i) {
    const NodeId spur_node = base_nodes[i];

    banned_edges.clear();
    for (std::size_t j : prefix_matches) {
      const auto other = emitted_paths_[j].edge_ids();
      if (other.size() > i) banned_edges.insert(other[i]);
    }
    for (std::size_t j = 0; j < i; ++j) ban_mask_[base_nodes[j]] = 1;

    DijkstraBans bans;
    bans.nodes = ban_mask_;
    bans.edges = &banned_edges;
    bans.stop_at = spur_node;
    const SpTree to_target = dijkstra(*graph_, target_, TreeDirection::to_root, bans);
    if (auto spur = lex_min_path(*graph_, spur_node, to_target, bans)) {
      std::vector<EdgeId> full(base_edges.begin(), base_edges.begin() + i);
      full.insert(full.end(), spur->edge_ids().begin(), spur->edge_ids().end());
      Candidate cand;
      cand.path = Path(*graph_, std::move(full));
      cand.nodes = path_nodes(*graph_, cand.path);
      candidates_.insert(std::move(cand));
    }

    for (std::size_t j = 0; j < i; ++j) ban_mask_[base_nodes[j]] = 0;

    // Narrow the prefix-match set for the next position.
    std::vector<std::size_t> kept;
    for (std::size_t j : prefix_matches) {
      const auto other = emitted_paths_[j].edge_ids();
      if (other.size() > i && other[i] == base_edges[i]) kept.push_back(j);
    }
    prefix_matches = std::move(kept);
  }
}

std::optional<Path> KspIterator::next() {
  if (done_) return std::nullopt;
  if (!primed_) {
    primed_ = true;
    DijkstraBans bans;
    bans.stop_at = source_;
    const SpTree to_target = dijkstra(*graph_, target_, TreeDirection::to_root, bans);
    auto sp = lex_min_path(*graph_, source_, to_target, DijkstraBans{});
    if (!sp) {
      done_ = true;
      return std::nullopt;
    }
    return emit(std::move(*sp));
  }
  generate_spur_candidates(emitted_paths_.size() - 1);
  if (candidates_.empty()) {
    done_ = true;
    return std::nullopt;
  }
  if (emitted_paths_.size() >= budget_) {
    done_ = true;
    budget_hit_ = true;
    return std::nullopt;
  }
  auto first = candidates_.begin();
  Path p = first->path;
  candidates_.erase(first);
  return emit(std::move(p));
}

}  // namespace kdpwml
