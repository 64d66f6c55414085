#pragma once

// Path-pair similarity. The default measure is the weighted Jaccard
// coefficient: shared-arc weight sum over union-arc weight sum. Arcs are
// identified by id, so parallel arcs and opposite directions of a two-way
// road count as distinct.
//
// Any measure mapping a path pair into [0,1] symmetrically can be plugged in
// through the SimilarityMeasure interface; all solvers accept one.

#include <span>

#include "kdpwml/graph.hpp"

namespace kdpwml {

class SimilarityMeasure {
 public:
  virtual ~SimilarityMeasure() = default;
  // Symmetric, in [0,1], and 1 for two identical nonempty paths.
  virtual double operator()(const Path& a, const Path& b) const = 0;
};

double weighted_jaccard(const Graph& g, const Path& a, const Path& b);

class WeightedJaccard final : public SimilarityMeasure {
 public:
  explicit WeightedJaccard(const Graph& g) : graph_(&g) {}
  double operator()(const Path& a, const Path& b) const override {
    return weighted_jaccard(*graph_, a, b);
  }

 private:
  const Graph* graph_;
};

// True iff Sim(p, q) < theta for every q in the set (strict comparison).
// Vacuously true for the empty set.
bool dissimilar_to_set(const Path& p, std::span<const Path> set, double theta,
                       const SimilarityMeasure& measure);

}  // namespace kdpwml
