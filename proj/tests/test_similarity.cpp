#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "kdpwml/similarity.hpp"

using namespace kdpwml;
using fixtures::path_through;

namespace {

struct Paths {
  Graph g = fixtures::running_example();
  Path p1 = path_through(g, {fixtures::S, fixtures::N3, fixtures::N5, fixtures::T});
  Path p2 = path_through(g, {fixtures::S, fixtures::N3, fixtures::N5, fixtures::N4, fixtures::T});
  Path p3 = path_through(g, {fixtures::S, fixtures::N3, fixtures::N4, fixtures::T});
  Path p4 = path_through(g, {fixtures::S, fixtures::N2, fixtures::N3, fixtures::N5, fixtures::T});
};

}  // namespace

TEST_CASE("weighted jaccard reproduces the fixture rationals exactly") {
  const Paths f;
  CHECK(weighted_jaccard(f.g, f.p1, f.p2) == 6.0 / 11.0);
  CHECK(weighted_jaccard(f.g, f.p1, f.p3) == 3.0 / 15.0);
  CHECK(weighted_jaccard(f.g, f.p1, f.p3) == 0.2);
  CHECK(weighted_jaccard(f.g, f.p1, f.p4) == 5.0 / 14.0);
}

TEST_CASE("weighted jaccard basic properties") {
  const Paths f;
  CHECK(weighted_jaccard(f.g, f.p1, f.p1) == 1.0);
  CHECK(weighted_jaccard(f.g, f.p3, f.p4) == 0.0);  // arc-disjoint
  CHECK(weighted_jaccard(f.g, Path(), Path()) == 0.0);
  CHECK(weighted_jaccard(f.g, f.p1, Path()) == 0.0);
}

TEST_CASE("opposite arcs of a two-way road do not intersect") {
  const Graph g = fixtures::running_example();
  const Path forward = path_through(g, {fixtures::N3, fixtures::N2});
  const Path backward = path_through(g, {fixtures::N2, fixtures::N3});
  CHECK(weighted_jaccard(g, forward, backward) == 0.0);
}

TEST_CASE("intersection-union identity over random path pairs") {
  // Sim computed arc-wise must equal inter / (len(a) + len(b) - inter).
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = fixtures::random_graph(seed);
    const auto [s, t] = fixtures::random_pair(g, seed);
    KspIterator it(g, s, t, 25);
    std::vector<Path> paths;
    while (auto p = it.next()) paths.push_back(std::move(*p));
    for (std::size_t i = 0; i < paths.size(); ++i) {
      for (std::size_t j = i; j < paths.size(); ++j) {
        const double sim = weighted_jaccard(g, paths[i], paths[j]);
        CHECK(sim == weighted_jaccard(g, paths[j], paths[i]));
        CHECK(sim >= 0.0);
        CHECK(sim <= 1.0);
        double inter = 0.0;
        for (EdgeId a : paths[i].edge_ids()) {
          for (EdgeId b : paths[j].edge_ids()) {
            if (a == b) inter += g.edge(a).weight;
          }
        }
        const double uni = paths[i].length() + paths[j].length() - inter;
        if (uni > 0.0) {
          CHECK(sim == doctest::Approx(inter / uni).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("dissimilar_to_set uses a strict threshold") {
  const Paths f;
  const std::vector<Path> only_p1{f.p1};
  const WeightedJaccard measure(f.g);
  // Sim(p1,p2) = 0.545 >= 0.5 -> not dissimilar.
  CHECK_FALSE(dissimilar_to_set(f.p2, only_p1, 0.5, measure));
  // Sim(p1,p3) = 0.2 < 0.5 -> dissimilar.
  CHECK(dissimilar_to_set(f.p3, only_p1, 0.5, measure));
  // Empty set: vacuously dissimilar.
  CHECK(dissimilar_to_set(f.p2, {}, 0.5, measure));
  // Exact boundary: Sim == theta fails the strict test.
  CHECK_FALSE(dissimilar_to_set(f.p2, only_p1, 6.0 / 11.0, measure));
}
