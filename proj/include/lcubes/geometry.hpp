#pragma once

// Little cubes C_d with exact rational coordinates: open axis-aligned boxes
// inside ]0,1[^d, configurations of such boxes with disjoint interiors, and
// the operad structure (unit, composition, symmetric action).

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lcubes/error.hpp"
#include "lcubes/rational.hpp"

namespace lcubes {

/// Open interval ]lo, hi[ with 0 <= lo < hi <= 1.
class Interval {
 public:
  Interval(Rational lo, Rational hi);
  static Interval full() { return {Rational(0), Rational(1)}; }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational length() const { return hi_ - lo_; }
  bool is_full() const { return lo_ == 0 && hi_ == 1; }

  /// True when the open intervals share a point.
  bool overlaps(const Interval& o) const { return lo_ < o.hi_ && o.lo_ < hi_; }
  /// Closed containment of `o` in this interval.
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

/// A single little cube: the affine orientation-preserving embedding of the
/// open unit d-cube onto the product of its intervals.
class Box {
 public:
  explicit Box(std::vector<Interval> intervals);
  static Box full(std::size_t dim);

  std::size_t dim() const { return intervals_.size(); }
  const std::vector<Interval>& intervals() const { return intervals_; }
  const Interval& operator[](std::size_t axis) const { return intervals_[axis]; }

  Rational volume() const;
  bool is_full() const;
  bool overlaps(const Box& o) const;
  bool contains(const Box& o) const;

  /// Restriction to the axis range [first, first + count).
  Box project(std::size_t first, std::size_t count) const;

  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// Image of `inner` under the affine map of `outer`, axis by axis:
/// lo + (hi - lo) * x.
Box box_apply(const Box& outer, const Box& inner);

/// Preimage of `image` under the affine map of `outer`. Requires
/// outer.contains(image).
Box box_unapply(const Box& outer, const Box& image);

/// Smallest box containing all of `boxes` (closed hull). Non-empty input.
Box bounding_box(std::span<const Box> boxes);

/// Tag for constructing configurations whose invariants are guaranteed by
/// construction; checked only by `assert` in debug builds.
struct Unchecked {};
inline constexpr Unchecked unchecked{};

/// An operation of C_d(j): j labeled boxes (label = list position) with
/// pairwise disjoint interiors. j = 0 is the nullary operation.
class Configuration {
 public:
  /// Validates every invariant; throws InvalidInput.
  Configuration(std::size_t dim, std::vector<Box> cubes);
  Configuration(std::size_t dim, std::vector<Box> cubes, Unchecked);

  static Configuration identity(std::size_t dim);
  static Configuration nullary(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t arity() const { return cubes_.size(); }
  const std::vector<Box>& cubes() const { return cubes_; }
  const Box& operator[](std::size_t label) const { return cubes_[label]; }

  bool is_identity() const { return cubes_.size() == 1 && cubes_[0].is_full(); }

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;

 private:
  std::size_t dim_;
  std::vector<Box> cubes_;
};

/// Empty string when valid, otherwise a description of the first violation.
std::string check_configuration(std::size_t dim, std::span<const Box> cubes);

/// A bijection of {0..n-1}; images_[i] is the image of i.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }

  Permutation inverse() const;
  /// (this * o)(i) = this(o(i)).
  Permutation operator*(const Permutation& o) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

Configuration identity(std::size_t dim);

/// Operadic composition. Result labels run over (i, inner label)
/// lexicographically. Throws InvalidInput on arity or dimension mismatch.
Configuration compose(const Configuration& outer, std::span<const Configuration> inners);

/// Partial composition outer o_i inner: plugs `inner` into slot i and keeps
/// the other slots as they are.
Configuration compose_at(const Configuration& outer, std::size_t slot, const Configuration& inner);

/// Right action: result label i carries the cube at label sigma(i) of c.
Configuration act(const Configuration& c, const Permutation& sigma);

/// Block permutation induced by sigma on the output of a composition whose
/// inputs have arities `sizes`; matches
/// compose(act(outer, sigma), inners permuted by sigma)
///   == act(compose(outer, inners), block_permutation(sigma, sizes)).
Permutation block_permutation(const Permutation& sigma, std::span<const std::size_t> sizes);

/// Minimum cube volume. Throws InvalidInput when there are no cubes.
Rational min_cube_volume(const Configuration& c);

}  // namespace lcubes
