#pragma once

// Bounded search for a chain of rewrite moves connecting two tensor words.
// A positive answer is a proof of equality in the tensor product; a negative
// answer proves nothing.

#include <cstddef>

#include "lcubes/words.hpp"

namespace lcubes {

enum class OracleVerdict { Equal, NotFound };

struct OracleResult {
  OracleVerdict verdict;
  /// Number of primitive moves in the connecting chain (Equal only).
  std::size_t moves = 0;
  /// States settled by both searches together.
  std::size_t states = 0;
};

struct OracleLimits {
  std::size_t depth = 12;
  std::size_t max_states_per_side = 4000;
};

/// Canonical representative reached by free moves: strips leafless subtrees,
/// deletes identity generators, merges same-block parent/child pairs, and
/// orders each node's (cube, child) pairs by cube. `moves` receives the
/// number of primitive rewrite moves spent.
TensorWord canonicalize(const TensorWord& w, const AxisBlocks& blocks, std::size_t& moves);

/// Bidirectional uniform-cost search over canonical trees. The two sides
/// are explored independently, so the verdict is symmetric in (w1, w2).
OracleResult word_equal_oracle(const TensorWord& w1, const TensorWord& w2, const AxisBlocks& blocks,
                               OracleLimits limits = {});

}  // namespace lcubes
