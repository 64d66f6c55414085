#include "kdpwml/subset_enum.hpp"

namespace kdpwml {

SubsetEnumerator::SubsetEnumerator(int max_cardinality, double theta,
                                   const SimilarityMeasure& measure, std::size_t stored_budget)
    : k_(max_cardinality), theta_(theta), measure_(&measure), budget_(stored_budget) {
  if (max_cardinality < 1) throw std::invalid_argument("subset enumerator: k must be >= 1");
  if (!(theta > 0.0) || theta > 1.0) {
    throw std::invalid_argument("subset enumerator: theta must be in (0, 1]");
  }
  if (stored_budget < 1) throw std::invalid_argument("subset enumerator: budget must be >= 1");
  subsets_.emplace_back(0u, 0u);  // the empty set
}

std::uint32_t SubsetEnumerator::register_path(Path p) {
  if (seen_.count(p) > 0) throw std::invalid_argument("subset enumerator: duplicate path");
  const auto id = static_cast<std::uint32_t>(paths_.size());
  std::vector<std::uint64_t> row((id + 63) / 64, 0);
  for (std::uint32_t j = 0; j < id; ++j) {
    if ((*measure_)(p, paths_[j]) < theta_) row[j / 64] |= std::uint64_t{1} << (j % 64);
  }
  compat_.push_back(std::move(row));
  seen_.emplace(p, id);
  paths_.push_back(std::move(p));
  return id;
}

bool SubsetEnumerator::compatible(std::uint32_t a, std::uint32_t b) const {
  if (a == b) return false;
  if (a < b) std::swap(a, b);
  return (compat_[a][b / 64] >> (b % 64)) & 1;
}

std::span<const std::uint32_t> SubsetEnumerator::subset_members(std::size_t index) const {
  const auto& [offset, size] = subsets_[index];
  return {arena_.data() + offset, size};
}

bool SubsetEnumerator::all_compatible(std::span<const std::uint32_t> members,
                                      std::uint32_t id) const {
  const auto& row = compat_[id];  // members all have smaller ids
  for (std::uint32_t m : members) {
    if (((row[m / 64] >> (m % 64)) & 1) == 0) return false;
  }
  return true;
}

void SubsetEnumerator::store_subset(const std::vector<std::uint32_t>& members) {
  if (subsets_.size() >= budget_) throw SubsetBudgetError(subsets_.size());
  const auto offset = static_cast<std::uint32_t>(arena_.size());
  arena_.insert(arena_.end(), members.begin(), members.end());
  subsets_.emplace_back(offset, static_cast<std::uint32_t>(members.size()));
}

}  // namespace kdpwml
