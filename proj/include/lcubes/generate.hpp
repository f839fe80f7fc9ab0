#pragma once

// Seeded generators for words and configurations. The pseudo-random source
// is SplitMix64 with rejection sampling for bounded integers, so a seed
// yields the same output on every platform and standard library.

#include <cstddef>
#include <cstdint>

#include "lcubes/geometry.hpp"
#include "lcubes/words.hpp"

namespace lcubes {

/// SplitMix64 (Steele, Lea, Flood 2014).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

/// Independent seed for trial `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct GenParams {
  std::uint64_t seed = 0;
  AxisBlocks blocks{{1, 1}};
  std::size_t max_generators = 4;
  std::size_t max_arity_per_generator = 3;
  /// Coordinates are multiples of 1/D, D the largest power of two <= this.
  std::size_t coordinate_denominator_bound = 8;
  bool allow_nullary = false;
  /// Cap on the number of leaves of generated words.
  std::size_t max_leaves = 8;
};

Permutation random_permutation(SplitMix64& rng, std::size_t n);

/// Random configuration of `arity` cubes in dimension `dim` on the dyadic
/// grid of step 1/denominator.
Configuration random_op(SplitMix64& rng, std::size_t dim, std::size_t arity, std::size_t denominator);

/// Word built by inserting between 1 and max_generators random generators at
/// random leaves; leaf labels are a random permutation.
TensorWord gen_word(const GenParams& params);
TensorWord gen_word(SplitMix64& rng, const GenParams& params);

/// The stock configuration with no guillotine split:
/// ]0,2/3[x]0,1/3[, ]2/3,1[x]0,2/3[, ]1/3,1[x]2/3,1[, ]0,1/3[x]1/3,1[.
Configuration pinwheel();

/// Random configuration of j cubes, or the pinwheel when `pinwheel` is set
/// (requires dim 2 and j 4; throws InvalidInput otherwise).
Configuration gen_config(std::uint64_t seed, std::size_t dim, std::size_t j, bool pinwheel = false);
Configuration gen_config(SplitMix64& rng, std::size_t dim, std::size_t j);

/// Mixture used for oracle cross-validation: evaluated random words, plain
/// random configurations, and randomly placed and perturbed pinwheels, with
/// at most `max_cubes` cubes (>= 4).
Configuration gen_mixed_config(SplitMix64& rng, std::size_t max_cubes);

}  // namespace lcubes
