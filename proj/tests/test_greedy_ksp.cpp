#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "kdpwml/greedy_ksp.hpp"
#include "kdpwml/kdpwml_exact.hpp"
#include "kdpwml/similarity.hpp"

using namespace kdpwml;

TEST_CASE("greedy on the fixture accepts p1, p3, p4") {
  const Graph g = fixtures::running_example();
  const ResultSet r = solve_greedy_ksp(g, {fixtures::S, fixtures::T, 3, 0.5});
  CHECK(r.cardinality() == 3);
  CHECK(r.complete);
  CHECK_FALSE(r.proven_optimal);
  // p2 (9) is rejected against p1 (Sim 6/11 >= 0.5); p3 (10) and p4 (11)
  // are accepted.
  CHECK(r.paths.paths[0].length() == 8.0);
  CHECK(r.paths.paths[1].length() == 10.0);
  CHECK(r.paths.paths[2].length() == 11.0);
  CHECK(r.stats.paths_generated == 4);
  CHECK(r.paths.collective_length == doctest::Approx(29.0).epsilon(1e-12));
}

TEST_CASE("greedy k = 1 returns the shortest path") {
  const Graph g = fixtures::running_example();
  const ResultSet r = solve_greedy_ksp(g, {fixtures::S, fixtures::T, 1, 0.5});
  REQUIRE(r.cardinality() == 1);
  CHECK(r.paths.paths[0].length() == 8.0);
}

TEST_CASE("fully arc-disjoint routes accept the stream prefix") {
  const Graph g(4, {{0, 1, 1.0}, {1, 3, 1.0}, {0, 2, 2.0}, {2, 3, 2.0}});
  const ResultSet r = solve_greedy_ksp(g, {0, 3, 2, 0.5});
  CHECK(r.cardinality() == 2);
  CHECK(r.stats.paths_generated == 2);
}

TEST_CASE("budget exhaustion keeps the accepted prefix, unproven") {
  const Graph g = fixtures::running_example();
  SolverOptions opts;
  opts.ksp_budget = 3;  // p1 accepted, p2 rejected, p3 accepted, then cut
  const ResultSet r = solve_greedy_ksp(g, {fixtures::S, fixtures::T, 3, 0.5}, opts);
  CHECK(r.cardinality() == 2);
  CHECK_FALSE(r.complete);
  CHECK(r.stats.resource_limited);
}

TEST_CASE("accepted pairs are dissimilar and lengths nondecreasing") {
  for (std::uint64_t seed = 500; seed < 520; ++seed) {
    const Graph g = fixtures::random_graph(seed);
    const auto [s, t] = fixtures::random_pair(g, seed);
    const Query q{s, t, 3, 0.5};
    const ResultSet r = solve_greedy_ksp(g, q);
    for (std::size_t i = 0; i < r.paths.paths.size(); ++i) {
      if (i > 0) CHECK(r.paths.paths[i].length() >= r.paths.paths[i - 1].length());
      for (std::size_t j = i + 1; j < r.paths.paths.size(); ++j) {
        CHECK(weighted_jaccard(g, r.paths.paths[i], r.paths.paths[j]) < q.theta);
      }
    }
  }
}

TEST_CASE("each accepted path is the shortest one dissimilar to those before it") {
  for (std::uint64_t seed = 600; seed < 615; ++seed) {
    const Graph g = fixtures::random_graph(seed);
    const auto [s, t] = fixtures::random_pair(g, seed);
    const Query q{s, t, 3, 0.5};
    const ResultSet r = solve_greedy_ksp(g, q);

    // Replay against the full enumerated path space.
    const auto all = enumerate_simple_paths(g, s, t, 100000);
    std::vector<Path> expected;
    for (const Path& p : all) {
      if (static_cast<int>(expected.size()) == q.k) break;
      if (dissimilar_to_set(p, expected, q.theta, WeightedJaccard(g))) expected.push_back(p);
    }
    REQUIRE(r.paths.paths.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(r.paths.paths[i] == expected[i]);
    }
  }
}

TEST_CASE("proven exact result is never longer than greedy at equal cardinality") {
  for (std::uint64_t seed = 700; seed < 715; ++seed) {
    const Graph g = fixtures::random_graph(seed);
    const auto [s, t] = fixtures::random_pair(g, seed);
    const Query q{s, t, 3, 0.5};
    const ResultSet exact = solve_exact(g, q);
    const ResultSet greedy = solve_greedy_ksp(g, q);
    if (exact.proven_optimal) {
      CHECK(greedy.cardinality() <= exact.cardinality());
      if (exact.cardinality() == greedy.cardinality()) {
        CHECK(exact.paths.collective_length <= greedy.paths.collective_length + 1e-9);
      }
    }
  }
}
