#pragma once

// Road-network representation and path arithmetic.
//
// Graph is an immutable directed multigraph: parallel arcs are allowed and
// every arc has its own id, so path intersection and simplicity stay
// well-defined even when two arcs connect the same node pair. Forward and
// reverse adjacency index the same arc set; the reverse lists drive
// shortest-path trees towards a target.

#include <cstdint>
#include <span>
#include <vector>

namespace kdpwml {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

// Absolute tolerance for length equality checks. Orderings always compare
// doubles exactly and break ties structurally.
inline constexpr double kLengthTolerance = 1e-9;

struct Edge {
  NodeId tail;
  NodeId head;
  double weight;  // finite, strictly positive
};

struct LonLat {
  double lon;
  double lat;
};

class Graph {
 public:
  Graph() = default;

  // Validates every arc: ids in range, weight finite and > 0, no self-loops.
  Graph(NodeId node_count, std::vector<Edge> edges);

  NodeId node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  // Ids of arcs leaving / entering a node.
  std::span<const EdgeId> out_edges(NodeId n) const;
  std::span<const EdgeId> in_edges(NodeId n) const;

  // Optional per-node coordinates, only consumed by the GeoJSON export.
  // Attach once right after loading, before the graph is shared.
  bool has_coordinates() const noexcept { return !coords_.empty(); }
  void set_coordinates(std::vector<LonLat> coords);
  const LonLat& coordinate(NodeId n) const;

 private:
  NodeId node_count_ = 0;
  std::vector<Edge> edges_;
  // CSR adjacency, arc ids grouped per node in ascending id order.
  std::vector<std::uint32_t> fwd_offsets_;
  std::vector<EdgeId> fwd_ids_;
  std::vector<std::uint32_t> rev_offsets_;
  std::vector<EdgeId> rev_ids_;
  std::vector<LonLat> coords_;
};

// A simple directed path stored as a sequence of arc ids plus its cached
// length. The default-constructed path is empty (no arcs, length 0); an
// empty path has no node sequence of its own and acts as a neutral element
// for concat.
class Path {
 public:
  Path() = default;

  // Validates connectivity (head of each arc equals tail of the next) and
  // simplicity (no node visited twice); length is the left-to-right sum of
  // the arc weights.
  Path(const Graph& g, std::vector<EdgeId> edge_ids);

  // Same validation, but keeps the caller-supplied length (which must agree
  // with the weight sum within kLengthTolerance). Used where a length was
  // produced by path concatenation and must be preserved bit-for-bit.
  static Path with_length(const Graph& g, std::vector<EdgeId> edge_ids, double length);

  std::span<const EdgeId> edge_ids() const noexcept { return edge_ids_; }
  std::size_t edge_count() const noexcept { return edge_ids_.size(); }
  bool empty() const noexcept { return edge_ids_.empty(); }
  double length() const noexcept { return length_; }

  // Edge-sequence equality.
  friend bool operator==(const Path& a, const Path& b) { return a.edge_ids_ == b.edge_ids_; }

 private:
  std::vector<EdgeId> edge_ids_;
  double length_ = 0.0;
};

// Result of joining two paths end to end. The joined arc sequence is carried
// even when the result revisits a node, because single-via-path repair needs
// the non-simple candidate as a marker.
struct Concatenation {
  std::vector<EdgeId> edge_ids;
  double length = 0.0;  // exact floating sum of the two part lengths
  bool simple = false;
};

// Joins prefix and suffix. The head node of prefix must equal the tail node
// of suffix; an empty operand is neutral. Throws std::invalid_argument on a
// disconnected junction.
Concatenation concat(const Graph& g, const Path& prefix, const Path& suffix);

// Node sequence of a path: tail of the first arc, then the head of every
// arc. Empty path yields an empty sequence.
std::vector<NodeId> path_nodes(const Graph& g, const Path& p);
std::vector<NodeId> path_nodes(const Graph& g, std::span<const EdgeId> edge_ids);

// True when no node repeats in the arc sequence (which must be connected).
bool is_simple(const Graph& g, std::span<const EdgeId> edge_ids);

// Deterministic total order: by length (exact double compare), then by node
// sequence, then by arc-id sequence. Returns <0, 0, >0.
int compare_paths(const Graph& g, const Path& a, const Path& b);

struct PathOrder {
  const Graph* g;
  bool operator()(const Path& a, const Path& b) const { return compare_paths(*g, a, b) < 0; }
};

struct PathHash {
  std::size_t operator()(const Path& p) const noexcept;
};

// A set of distinct paths with the cached sum of their lengths.
struct PathSet {
  std::vector<Path> paths;
  double collective_length = 0.0;
};

// Builds a PathSet, summing lengths in the given order. Throws
// std::invalid_argument if two paths have identical arc sequences.
PathSet make_path_set(std::vector<Path> paths);

}  // namespace kdpwml
