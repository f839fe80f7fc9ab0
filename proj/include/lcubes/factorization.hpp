#pragma once

// Inverse of the evaluation map on decomposable configurations: recursive
// strip grouping along axis blocks produces a canonical tensor word, or a
// witness that no block admits a split.

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lcubes/geometry.hpp"
#include "lcubes/words.hpp"

namespace lcubes {

/// Partition of cube labels by their projections onto one block.
/// Groups are ordered by minimal label; labels inside a group ascend.
struct StripGrouping {
  std::size_t block;
  std::vector<std::vector<std::size_t>> groups;
  std::vector<Box> hulls;  // closed hull of each group's projections, in dimension k_block

  friend bool operator==(const StripGrouping&, const StripGrouping&) = default;
};

/// Finest grouping of `projections` with pairwise interior-disjoint hulls
/// that is coarser than `initial`: merges groups whose hulls meet until none
/// do. Groups are returned in canonical order.
std::vector<std::vector<std::size_t>> close_groups(std::span<const Box> projections,
                                                   std::vector<std::vector<std::size_t>> initial);

/// Overlap components of the block projections, closed under hull merging.
/// Throws InvalidInput for an empty configuration or a bad block index.
StripGrouping strip_grouping(const Configuration& c, const AxisBlocks& blocks, std::size_t block);

struct NotDecomposable {
  Configuration config;
  /// Labels (in `config`) of the sub-configuration where no split exists.
  std::vector<std::size_t> labels;
  /// That sub-configuration rescaled to the unit cube.
  Configuration stuck;
  /// One single-group grouping per block.
  std::vector<StripGrouping> single_groups;
};

class FactorResult {
 public:
  explicit FactorResult(TensorWord w) : value_(std::move(w)) {}
  explicit FactorResult(NotDecomposable nd) : value_(std::move(nd)) {}

  bool decomposable() const { return std::holds_alternative<TensorWord>(value_); }
  const TensorWord& word() const { return std::get<TensorWord>(value_); }
  const NotDecomposable& witness() const { return std::get<NotDecomposable>(value_); }

 private:
  std::variant<TensorWord, NotDecomposable> value_;
};

/// Canonical factorization. Throws InvalidInput on a dimension mismatch.
FactorResult factor(const Configuration& c, const AxisBlocks& blocks);

bool is_decomposable(const Configuration& c, const AxisBlocks& blocks);

/// Exhaustive search over set partitions in every block, recursively.
/// Independent of strip_grouping; throws InvalidInput above `max_cubes`.
bool brute_force_decomposable(const Configuration& c, const AxisBlocks& blocks, std::size_t max_cubes = 6);

/// Common refinement p ^ pbar of two heads in one block, restricted to the
/// cells inhabited by cube projections of `c`, with the witnesses
///   act(compose(p, p_parts), p_order) == wedge
///   act(compose(pbar, pbar_parts), pbar_order) == wedge.
struct Refinement {
  Configuration wedge;
  std::vector<Configuration> p_parts;
  Permutation p_order;
  std::vector<Configuration> pbar_parts;
  Permutation pbar_order;
};

/// Throws InvalidInput unless every projection lies in the interior (relative
/// to ]0,1[^k) of exactly one cube of p and of pbar.
Refinement common_refinement(const Configuration& p, const Configuration& pbar, const Configuration& c,
                             const AxisBlocks& blocks, std::size_t block);

}  // namespace lcubes
