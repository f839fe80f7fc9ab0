#pragma once

// Tensor words: trees of block-tagged little-cubes generators with labeled
// leaves, representing operations of C_{k_1} (x) ... (x) C_{k_N}. Includes the
// evaluation map into C_{k_1 + ... + k_N}, the relations of the
// Boardman-Vogt tensor product as rewrite moves, and the general-position
// normal form.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcubes/geometry.hpp"

namespace lcubes {

/// Ordered partition of the axes of ]0,1[^d into contiguous blocks.
class AxisBlocks {
 public:
  explicit AxisBlocks(std::vector<std::size_t> sizes);
  /// Parses "1,1" or "2,3".
  static AxisBlocks parse(std::string_view text);

  std::size_t count() const { return sizes_.size(); }
  std::size_t size(std::size_t block) const { return sizes_.at(block); }
  std::size_t offset(std::size_t block) const { return offsets_.at(block); }
  std::size_t dim() const { return offsets_.back(); }
  const std::vector<std::size_t>& sizes() const { return sizes_; }
  std::string str() const;

  friend bool operator==(const AxisBlocks& a, const AxisBlocks& b) { return a.sizes_ == b.sizes_; }

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> offsets_;
};

/// An elementary operation 1 (x) ... (x) op (x) ... (x) 1 acting on one block.
struct Generator {
  std::size_t block;
  Configuration op;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Rooted tree of generators. Leaves carry labels 0..j-1; a generator node
/// has exactly op.arity() ordered children.
class TensorWord {
 public:
  static TensorWord leaf(std::size_t label);
  /// Throws InvalidInput if the child count differs from the op arity.
  static TensorWord node(Generator gen, std::vector<TensorWord> children);
  static TensorWord nullary(std::size_t block, std::size_t block_dim);

  bool is_leaf() const { return !gen_.has_value(); }
  std::size_t label() const { return label_; }
  const Generator& generator() const { return *gen_; }
  const std::vector<TensorWord>& children() const { return children_; }
  const TensorWord& child(std::size_t i) const { return children_.at(i); }

  /// Number of leaves.
  std::size_t arity() const;
  bool is_nullary_generator() const { return gen_ && children_.empty(); }

  friend bool operator==(const TensorWord&, const TensorWord&) = default;

 private:
  std::optional<Generator> gen_;
  std::size_t label_ = 0;
  std::vector<TensorWord> children_;
};

using Path = std::vector<std::size_t>;

/// Throws InvalidInput unless the word is well formed over `blocks`: block
/// indices in range, op dimensions match block sizes, child counts match,
/// and leaf labels are exactly 0..j-1.
void validate(const TensorWord& w, const AxisBlocks& blocks);

std::size_t generator_count(const TensorWord& w);

/// Compact canonical text form, used for hashing and ordering.
std::string key(const TensorWord& w);

/// Leaf labels in depth-first order.
std::vector<std::size_t> leaf_labels(const TensorWord& w);

/// Replaces every leaf label l by relabel[l].
TensorWord relabel(const TensorWord& w, std::span<const std::size_t> relabel);

/// Orders each node's (cube, child) pairs by cube. Words differing only by
/// the symmetric-group identification of a node's inputs map to the same
/// result.
TensorWord order_by_cubes(const TensorWord& w);

const TensorWord& subtree(const TensorWord& w, const Path& path);
TensorWord replace_subtree(const TensorWord& w, const Path& path, TensorWord replacement);

/// Image of a generator under the coordinate inclusion of its block: every
/// cube becomes a strip, full on the axes of all other blocks.
Configuration mu_embed(const Generator& g, const AxisBlocks& blocks);

/// The evaluation map: cube at label l is the composite of the strip maps
/// along the root-to-leaf path.
Configuration eval(const TensorWord& w, const AxisBlocks& blocks);

enum class MoveKind {
  InterchangeForward,
  InterchangeBackward,
  HeadMerge,
  HeadSplit,
  NullaryStrip,
  NullaryGraft,
  UnitInsert,
  UnitDelete,
};

std::string_view to_string(MoveKind kind);

/// One relation of the tensor product applied at a node.
///
/// - HeadMerge: child `slot` has the same block as the node; replaces the
///   pair by the partial composite op o_slot child_op.
/// - HeadSplit: inverse of HeadMerge. Children [slot, slot+count) are moved
///   under a new child whose cube in the parent is `box`.
/// - NullaryStrip: child `slot` is a nullary generator; drops it and its cube.
/// - NullaryGraft: inverse; inserts cube `box` at `slot` with a nullary
///   child in `block`.
/// - InterchangeForward / InterchangeBackward: every child is a generator of
///   one other block with the same op; transposes the grid. Forward moves a
///   higher-numbered block to the top, backward a lower-numbered one.
/// - UnitInsert: wraps the subtree at `position` in an identity generator of
///   `block`. UnitDelete removes such a wrapper.
struct RewriteMove {
  MoveKind kind;
  Path position;
  std::size_t slot = 0;
  std::size_t count = 0;
  std::optional<Box> box = std::nullopt;
  std::size_t block = 0;
};

/// Throws NotApplicable when the precondition of the move fails.
TensorWord apply_move(const TensorWord& w, const RewriteMove& m, const AxisBlocks& blocks);

/// Rewrites a word of arity >= 2 into head o (t_1, ..., t_a) with head arity
/// a >= 2 and no nullary t_i. Throws InvalidInput for arity < 2.
TensorWord normalize_gen_pos(const TensorWord& w, const AxisBlocks& blocks);

/// True when the root has arity >= 2 and no nullary child.
bool is_gen_pos_normal(const TensorWord& w);

}  // namespace lcubes
