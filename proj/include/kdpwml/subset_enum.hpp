#pragma once

// Incremental generation of all pairwise-compatible path subsets of
// cardinality <= k that contain the newest path, the classic binomial-tree
// subset scheme with pruning.
//
// The tree is flattened: instead of copying subtrees, the enumerator keeps
// every previously generated compatible subset of cardinality <= k-1
// (including the empty set) and, when a path is added, extends each stored
// subset whose members are all compatible with it. A subset holding an
// incompatible pair is pruned the moment that pair appears and is therefore
// never materialized, which matches excluding the pair's branch from every
// subtree.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "kdpwml/graph.hpp"
#include "kdpwml/similarity.hpp"

namespace kdpwml {

inline constexpr std::size_t kDefaultSubsetBudget = 5'000'000;

// Raised when the stored-subset budget would be exceeded; the generation of
// compatible subsets is exponential in the worst case and callers must fail
// loudly rather than thrash.
class SubsetBudgetError : public std::runtime_error {
 public:
  explicit SubsetBudgetError(std::size_t stored)
      : std::runtime_error("subset enumeration exceeded budget of " + std::to_string(stored) +
                           " stored subsets"),
        stored_(stored) {}
  std::size_t stored_count() const noexcept { return stored_; }

 private:
  std::size_t stored_;
};

class SubsetEnumerator {
 public:
  // Compatibility of a pair means Sim < theta (strict). The measure is
  // evaluated once per pair and memoized in a bit matrix.
  SubsetEnumerator(int max_cardinality, double theta, const SimilarityMeasure& measure,
                   std::size_t stored_budget = kDefaultSubsetBudget);

  // Registers p (assigning the next id) and invokes on_subset once for every
  // pairwise-compatible subset of registered paths that contains p, as a
  // span of ids in ascending order (p's id last). Emitted subsets of
  // cardinality <= k-1 are kept for future extensions.
  //
  // Throws std::invalid_argument if p was already added and
  // SubsetBudgetError when the stored-subset budget trips.
  template <typename OnSubset>
  void add_path(Path p, OnSubset&& on_subset) {
    const std::uint32_t id = register_path(std::move(p));
    const std::size_t existing = subsets_.size();
    scratch_.clear();
    for (std::size_t si = 0; si < existing; ++si) {
      const auto members = subset_members(si);
      if (!all_compatible(members, id)) continue;
      scratch_.assign(members.begin(), members.end());
      scratch_.push_back(id);
      ++emitted_;
      on_subset(std::span<const std::uint32_t>(scratch_));
      if (scratch_.size() + 1 <= static_cast<std::size_t>(k_)) store_subset(scratch_);
    }
  }

  bool contains(const Path& p) const { return seen_.count(p) > 0; }
  const Path& path(std::uint32_t id) const { return paths_.at(id); }
  bool compatible(std::uint32_t a, std::uint32_t b) const;

  std::size_t path_count() const noexcept { return paths_.size(); }
  std::size_t stored_count() const noexcept { return subsets_.size(); }
  std::size_t emitted_count() const noexcept { return emitted_; }

 private:
  std::uint32_t register_path(Path p);
  std::span<const std::uint32_t> subset_members(std::size_t index) const;
  bool all_compatible(std::span<const std::uint32_t> members, std::uint32_t id) const;
  void store_subset(const std::vector<std::uint32_t>& members);

  int k_;
  double theta_;
  const SimilarityMeasure* measure_;
  std::size_t budget_;
  std::size_t emitted_ = 0;

  std::vector<Path> paths_;
  std::unordered_map<Path, std::uint32_t, PathHash> seen_;
  // Row i holds compatibility bits for ids j < i.
  std::vector<std::vector<std::uint64_t>> compat_;
  // Stored subsets flattened into one arena; subsets_[i] = (offset, size).
  // Entry 0 is the empty set.
  std::vector<std::uint32_t> arena_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> subsets_;
  std::vector<std::uint32_t> scratch_;
};

}  // namespace kdpwml
