#pragma once

// Shared test fixtures.
//
// running_example() is a 7-node road network (drawn undirected, stored as
// opposing arc pairs) whose path lengths and similarity values anchor most
// fixture tests:
//
//   nodes: s=0, n1=1, n2=2, n3=3, n4=4, n5=5, t=6
//   undirected edges (weight):
//     s-n1 (6)   s-n2 (5.5)  s-n3 (3)   n1-n4 (6)  n2-n3 (0.5)  n2-n4 (6.5)
//     n3-n4 (6)  n3-n5 (3)   n4-n5 (2)  n4-t (1)   n5-t (2)
//
//   the four shortest s->t paths:
//     p1 = s,n3,n5,t        len 8   (the shortest path)
//     p2 = s,n3,n5,n4,t     len 9
//     p3 = s,n3,n4,t        len 10
//     p4 = s,n2,n3,n5,t     len 11
//   Sim(p1,p2) = 6/11, Sim(p1,p3) = 3/15, Sim(p1,p4) = 5/14.
//
//   SSVP emission order: p1 (8), via n4 -> p2 (9), via n2 -> p4 (11,
//   repaired from the non-simple s,n3,n2,n3,n5,t), via n1 -> s,n1,n4,t (13).

#include <cstdint>
#include <random>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "kdpwml/graph.hpp"
#include "kdpwml/shortest_path.hpp"

namespace fixtures {

inline constexpr kdpwml::NodeId S = 0;
inline constexpr kdpwml::NodeId N1 = 1;
inline constexpr kdpwml::NodeId N2 = 2;
inline constexpr kdpwml::NodeId N3 = 3;
inline constexpr kdpwml::NodeId N4 = 4;
inline constexpr kdpwml::NodeId N5 = 5;
inline constexpr kdpwml::NodeId T = 6;

inline kdpwml::Graph running_example() {
  using kdpwml::Edge;
  const std::vector<std::tuple<kdpwml::NodeId, kdpwml::NodeId, double>> undirected = {
      {S, N1, 6.0},  {S, N2, 5.5},  {S, N3, 3.0},  {N1, N4, 6.0},
      {N2, N3, 0.5}, {N2, N4, 6.5}, {N3, N4, 6.0}, {N3, N5, 3.0},
      {N4, N5, 2.0}, {N4, T, 1.0},  {N5, T, 2.0},
  };
  std::vector<Edge> arcs;
  arcs.reserve(2 * undirected.size());
  for (const auto& [u, v, w] : undirected) {
    arcs.push_back({u, v, w});
    arcs.push_back({v, u, w});
  }
  return kdpwml::Graph(7, std::move(arcs));
}

// Path through the given node sequence, using the smallest arc id between
// consecutive nodes. Throws if some hop has no arc.
inline kdpwml::Path path_through(const kdpwml::Graph& g,
                                 const std::vector<kdpwml::NodeId>& nodes) {
  std::vector<kdpwml::EdgeId> ids;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    bool found = false;
    for (kdpwml::EdgeId id : g.out_edges(nodes[i])) {
      if (g.edge(id).head == nodes[i + 1]) {
        ids.push_back(id);
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("path_through: missing arc");
  }
  return kdpwml::Path(g, std::move(ids));
}

// Small random multigraph: min..max nodes / arcs, integer weights 1..10,
// self-loops excluded, parallel arcs allowed. Deterministic per seed.
inline kdpwml::Graph random_graph(std::uint64_t seed, std::uint32_t min_nodes = 8,
                                  std::uint32_t max_nodes = 12, std::uint32_t min_arcs = 14,
                                  std::uint32_t max_arcs = 30) {
  std::mt19937_64 rng(seed);
  const std::uint32_t n = min_nodes + rng() % (max_nodes - min_nodes + 1);
  const std::uint32_t m = min_arcs + rng() % (max_arcs - min_arcs + 1);
  std::vector<kdpwml::Edge> arcs;
  arcs.reserve(m);
  while (arcs.size() < m) {
    const auto u = static_cast<kdpwml::NodeId>(rng() % n);
    const auto v = static_cast<kdpwml::NodeId>(rng() % n);
    if (u == v) continue;
    arcs.push_back({u, v, static_cast<double>(1 + rng() % 10)});
  }
  return kdpwml::Graph(n, std::move(arcs));
}

// Deterministic (source, target) pick: the first drawn pair with target
// reachable from source, or the first distinct pair if none found in 64
// attempts.
inline std::pair<kdpwml::NodeId, kdpwml::NodeId> random_pair(const kdpwml::Graph& g,
                                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  bool have_fallback = false;
  std::pair<kdpwml::NodeId, kdpwml::NodeId> fallback{0, 1};
  for (int attempt = 0; attempt < 64; ++attempt) {
    const auto s = static_cast<kdpwml::NodeId>(rng() % g.node_count());
    const auto t = static_cast<kdpwml::NodeId>(rng() % g.node_count());
    if (s == t) continue;
    if (!have_fallback) {
      fallback = {s, t};
      have_fallback = true;
    }
    const auto tree = kdpwml::dijkstra(g, s, kdpwml::TreeDirection::from_root);
    if (tree.reachable(t)) return {s, t};
  }
  return fallback;
}

}  // namespace fixtures
