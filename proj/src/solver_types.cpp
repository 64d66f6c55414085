#include "kdpwml/solver_types.hpp"

#include <stdexcept>

namespace kdpwml {

void Query::validate(const Graph& g) const {
  if (source >= g.node_count() || target >= g.node_count()) {
    throw std::invalid_argument("query: node id out of range");
  }
  if (source == target) throw std::invalid_argument("query: source equals target");
  if (k < 1) throw std::invalid_argument("query: k must be >= 1");
  if (!(theta > 0.0) || theta > 1.0) throw std::invalid_argument("query: theta must be in (0, 1]");
}

}  // namespace kdpwml
