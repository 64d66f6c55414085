#include "kdpwml/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace kdpwml {

Graph::Graph(NodeId node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.tail >= node_count_ || e.head >= node_count_) {
      throw std::invalid_argument("edge " + std::to_string(i) + ": node id out of range");
    }
    if (e.tail == e.head) {
      throw std::invalid_argument("edge " + std::to_string(i) + ": self-loop");
    }
    if (!std::isfinite(e.weight) || e.weight <= 0.0) {
      throw std::invalid_argument("edge " + std::to_string(i) + ": non-positive weight");
    }
  }

  fwd_offsets_.assign(static_cast<std::size_t>(node_count_) + 1, 0);
  rev_offsets_.assign(static_cast<std::size_t>(node_count_) + 1, 0);
  for (const Edge& e : edges_) {
    ++fwd_offsets_[e.tail + 1];
    ++rev_offsets_[e.head + 1];
  }
  for (std::size_t i = 1; i < fwd_offsets_.size(); ++i) {
    fwd_offsets_[i] += fwd_offsets_[i - 1];
    rev_offsets_[i] += rev_offsets_[i - 1];
  }
  fwd_ids_.resize(edges_.size());
  rev_ids_.resize(edges_.size());
  std::vector<std::uint32_t> fpos(fwd_offsets_.begin(), fwd_offsets_.end() - 1);
  std::vector<std::uint32_t> rpos(rev_offsets_.begin(), rev_offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    fwd_ids_[fpos[edges_[id].tail]++] = id;
    rev_ids_[rpos[edges_[id].head]++] = id;
  }
}

std::span<const EdgeId> Graph::out_edges(NodeId n) const {
  if (n >= node_count_) throw std::out_of_range("node id out of range");
  return {fwd_ids_.data() + fwd_offsets_[n], fwd_offsets_[n + 1] - fwd_offsets_[n]};
}

std::span<const EdgeId> Graph::in_edges(NodeId n) const {
  if (n >= node_count_) throw std::out_of_range("node id out of range");
  return {rev_ids_.data() + rev_offsets_[n], rev_offsets_[n + 1] - rev_offsets_[n]};
}

void Graph::set_coordinates(std::vector<LonLat> coords) {
  if (coords.size() != node_count_) {
    throw std::invalid_argument("coordinate count does not match node count");
  }
  coords_ = std::move(coords);
}

const LonLat& Graph::coordinate(NodeId n) const {
  if (!has_coordinates()) throw std::logic_error("graph has no coordinates");
  return coords_.at(n);
}

namespace {

void validate_arc_sequence(const Graph& g, std::span<const EdgeId> ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] >= g.edge_count()) throw std::invalid_argument("path: edge id out of range");
    if (i > 0 && g.edge(ids[i - 1]).head != g.edge(ids[i]).tail) {
      throw std::invalid_argument("path: consecutive edges not connected");
    }
  }
  if (!ids.empty() && !is_simple(g, ids)) {
    throw std::invalid_argument("path: node visited twice");
  }
}

double sum_weights(const Graph& g, std::span<const EdgeId> ids) {
  double total = 0.0;
  for (EdgeId id : ids) total += g.edge(id).weight;
  return total;
}

}  // namespace

Path::Path(const Graph& g, std::vector<EdgeId> edge_ids) : edge_ids_(std::move(edge_ids)) {
  validate_arc_sequence(g, edge_ids_);
  length_ = sum_weights(g, edge_ids_);
}

Path Path::with_length(const Graph& g, std::vector<EdgeId> edge_ids, double length) {
  Path p(g, std::move(edge_ids));
  if (std::abs(p.length_ - length) > kLengthTolerance) {
    throw std::invalid_argument("path: supplied length disagrees with weight sum");
  }
  p.length_ = length;
  return p;
}

Concatenation concat(const Graph& g, const Path& prefix, const Path& suffix) {
  if (prefix.empty()) return {std::vector<EdgeId>(suffix.edge_ids().begin(), suffix.edge_ids().end()), suffix.length(), true};
  if (suffix.empty()) return {std::vector<EdgeId>(prefix.edge_ids().begin(), prefix.edge_ids().end()), prefix.length(), true};
  const NodeId junction = g.edge(prefix.edge_ids().back()).head;
  if (junction != g.edge(suffix.edge_ids().front()).tail) {
    throw std::invalid_argument("concat: suffix does not start at the head of prefix");
  }
  Concatenation out;
  out.edge_ids.reserve(prefix.edge_count() + suffix.edge_count());
  out.edge_ids.insert(out.edge_ids.end(), prefix.edge_ids().begin(), prefix.edge_ids().end());
  out.edge_ids.insert(out.edge_ids.end(), suffix.edge_ids().begin(), suffix.edge_ids().end());
  out.length = prefix.length() + suffix.length();
  out.simple = is_simple(g, out.edge_ids);
  return out;
}

std::vector<NodeId> path_nodes(const Graph& g, std::span<const EdgeId> edge_ids) {
  std::vector<NodeId> nodes;
  if (edge_ids.empty()) return nodes;
  nodes.reserve(edge_ids.size() + 1);
  nodes.push_back(g.edge(edge_ids.front()).tail);
  for (EdgeId id : edge_ids) nodes.push_back(g.edge(id).head);
  return nodes;
}

std::vector<NodeId> path_nodes(const Graph& g, const Path& p) {
  return path_nodes(g, p.edge_ids());
}

bool is_simple(const Graph& g, std::span<const EdgeId> edge_ids) {
  if (edge_ids.empty()) return true;
  std::unordered_set<NodeId> seen;
  seen.reserve(edge_ids.size() + 1);
  seen.insert(g.edge(edge_ids.front()).tail);
  for (EdgeId id : edge_ids) {
    if (!seen.insert(g.edge(id).head).second) return false;
  }
  return true;
}

int compare_paths(const Graph& g, const Path& a, const Path& b) {
  if (a.length() < b.length()) return -1;
  if (a.length() > b.length()) return 1;
  const auto an = path_nodes(g, a);
  const auto bn = path_nodes(g, b);
  if (an != bn) return an < bn ? -1 : 1;
  const auto ae = a.edge_ids();
  const auto be = b.edge_ids();
  if (std::ranges::lexicographical_compare(ae, be)) return -1;
  if (std::ranges::lexicographical_compare(be, ae)) return 1;
  return 0;
}

std::size_t PathHash::operator()(const Path& p) const noexcept {
  // FNV-1a over the arc-id sequence.
  std::size_t h = 1469598103934665603ull;
  for (EdgeId id : p.edge_ids()) {
    h ^= id;
    h *= 1099511628211ull;
  }
  return h;
}

PathSet make_path_set(std::vector<Path> paths) {
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      if (paths[i] == paths[j]) throw std::invalid_argument("path set: duplicate path");
    }
  }
  PathSet set;
  set.paths = std::move(paths);
  for (const Path& p : set.paths) set.collective_length += p.length();
  return set;
}

}  // namespace kdpwml
