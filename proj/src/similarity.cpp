#include "kdpwml/similarity.hpp"

#include <algorithm>
#include <vector>

namespace kdpwml {

double weighted_jaccard(const Graph& g, const Path& a, const Path& b) {
  std::vector<EdgeId> ae(a.edge_ids().begin(), a.edge_ids().end());
  std::vector<EdgeId> be(b.edge_ids().begin(), b.edge_ids().end());
  std::sort(ae.begin(), ae.end());
  std::sort(be.begin(), be.end());
  double inter = 0.0;
  double uni = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ae.size() || j < be.size()) {
    if (j == be.size() || (i < ae.size() && ae[i] < be[j])) {
      uni += g.edge(ae[i++]).weight;
    } else if (i == ae.size() || be[j] < ae[i]) {
      uni += g.edge(be[j++]).weight;
    } else {
      const double w = g.edge(ae[i]).weight;
      inter += w;
      uni += w;
      ++i;
      ++j;
    }
  }
  if (uni == 0.0) return 0.0;  // both empty
  return inter / uni;
}

bool dissimilar_to_set(const Path& p, std::span<const Path> set, double theta,
                       const SimilarityMeasure& measure) {
  for (const Path& q : set) {
    if (!(measure(p, q) < theta)) return false;
  }
  return true;
}

}  // namespace kdpwml
