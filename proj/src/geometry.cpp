#include "lcubes/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace lcubes {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(Rational(0) <= lo_ && lo_ < hi_ && hi_ <= Rational(1))) {
    throw InvalidInput("interval ]" + lo_.str() + "," + hi_.str() + "[ violates 0 <= lo < hi <= 1");
  }
}

Box::Box(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  if (intervals_.empty()) throw InvalidInput("box of dimension 0");
}

Box Box::full(std::size_t dim) { return Box(std::vector<Interval>(dim, Interval::full())); }

Rational Box::volume() const {
  Rational v(1);
  for (const auto& iv : intervals_) v *= iv.length();
  return v;
}

bool Box::is_full() const {
  return std::all_of(intervals_.begin(), intervals_.end(), [](const Interval& iv) { return iv.is_full(); });
}

bool Box::overlaps(const Box& o) const {
  assert(dim() == o.dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    if (!intervals_[a].overlaps(o.intervals_[a])) return false;
  }
  return true;
}

bool Box::contains(const Box& o) const {
  assert(dim() == o.dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    if (!intervals_[a].contains(o.intervals_[a])) return false;
  }
  return true;
}

Box Box::project(std::size_t first, std::size_t count) const {
  assert(first + count <= dim());
  return Box(std::vector<Interval>(intervals_.begin() + static_cast<std::ptrdiff_t>(first),
                                   intervals_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

Box box_apply(const Box& outer, const Box& inner) {
  if (outer.dim() != inner.dim()) throw InvalidInput("box_apply: dimension mismatch");
  std::vector<Interval> out;
  out.reserve(outer.dim());
  for (std::size_t a = 0; a < outer.dim(); ++a) {
    const auto& o = outer[a];
    const Rational len = o.length();
    out.emplace_back(o.lo() + len * inner[a].lo(), o.lo() + len * inner[a].hi());
  }
  return Box(std::move(out));
}

Box box_unapply(const Box& outer, const Box& image) {
  if (outer.dim() != image.dim()) throw InvalidInput("box_unapply: dimension mismatch");
  if (!outer.contains(image)) throw InvalidInput("box_unapply: image not contained in outer box");
  std::vector<Interval> out;
  out.reserve(outer.dim());
  for (std::size_t a = 0; a < outer.dim(); ++a) {
    const auto& o = outer[a];
    const Rational len = o.length();
    out.emplace_back((image[a].lo() - o.lo()) / len, (image[a].hi() - o.lo()) / len);
  }
  return Box(std::move(out));
}

Box bounding_box(std::span<const Box> boxes) {
  if (boxes.empty()) throw InvalidInput("bounding_box of no boxes");
  std::vector<Interval> out = boxes.front().intervals();
  for (const auto& b : boxes.subspan(1)) {
    for (std::size_t a = 0; a < out.size(); ++a) {
      out[a] = Interval(std::min(out[a].lo(), b[a].lo()), std::max(out[a].hi(), b[a].hi()));
    }
  }
  return Box(std::move(out));
}

std::string check_configuration(std::size_t dim, std::span<const Box> cubes) {
  if (dim == 0) return "configuration of dimension 0";
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    if (cubes[i].dim() != dim) {
      return "cube " + std::to_string(i + 1) + " has dimension " + std::to_string(cubes[i].dim()) +
             ", expected " + std::to_string(dim);
    }
  }
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    for (std::size_t k = i + 1; k < cubes.size(); ++k) {
      if (cubes[i].overlaps(cubes[k])) {
        return "cubes " + std::to_string(i + 1) + " and " + std::to_string(k + 1) + " have intersecting interiors";
      }
    }
  }
  return {};
}

Configuration::Configuration(std::size_t dim, std::vector<Box> cubes) : dim_(dim), cubes_(std::move(cubes)) {
  if (auto err = check_configuration(dim_, cubes_); !err.empty()) throw InvalidInput(err);
}

Configuration::Configuration(std::size_t dim, std::vector<Box> cubes, Unchecked)
    : dim_(dim), cubes_(std::move(cubes)) {
  assert(check_configuration(dim_, cubes_).empty());
}

Configuration Configuration::identity(std::size_t dim) {
  if (dim == 0) throw InvalidInput("identity of dimension 0");
  return Configuration(dim, {Box::full(dim)}, unchecked);
}

Configuration Configuration::nullary(std::size_t dim) {
  if (dim == 0) throw InvalidInput("nullary operation of dimension 0");
  return Configuration(dim, {}, unchecked);
}

Configuration identity(std::size_t dim) { return Configuration::identity(dim); }

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw InvalidInput("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (size() != o.size()) throw InvalidInput("permutation size mismatch");
  std::vector<std::size_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = images_[o.images_[i]];
  return Permutation(std::move(out));
}

Configuration compose(const Configuration& outer, std::span<const Configuration> inners) {
  if (inners.size() != outer.arity()) {
    throw InvalidInput("compose: " + std::to_string(inners.size()) + " inputs for an operation of arity " +
                       std::to_string(outer.arity()));
  }
  std::vector<Box> out;
  for (std::size_t i = 0; i < inners.size(); ++i) {
    if (inners[i].dim() != outer.dim()) throw InvalidInput("compose: dimension mismatch");
    for (const auto& cube : inners[i].cubes()) out.push_back(box_apply(outer[i], cube));
  }
  return Configuration(outer.dim(), std::move(out), unchecked);
}

Configuration compose_at(const Configuration& outer, std::size_t slot, const Configuration& inner) {
  if (slot >= outer.arity()) throw InvalidInput("compose_at: slot out of range");
  if (inner.dim() != outer.dim()) throw InvalidInput("compose_at: dimension mismatch");
  std::vector<Box> out;
  out.reserve(outer.arity() - 1 + inner.arity());
  for (std::size_t i = 0; i < outer.arity(); ++i) {
    if (i != slot) {
      out.push_back(outer[i]);
      continue;
    }
    for (const auto& cube : inner.cubes()) out.push_back(box_apply(outer[i], cube));
  }
  return Configuration(outer.dim(), std::move(out), unchecked);
}

Configuration act(const Configuration& c, const Permutation& sigma) {
  if (sigma.size() != c.arity()) throw InvalidInput("act: permutation size does not match arity");
  std::vector<Box> out;
  out.reserve(c.arity());
  for (std::size_t i = 0; i < c.arity(); ++i) out.push_back(c[sigma(i)]);
  return Configuration(c.dim(), std::move(out), unchecked);
}

Permutation block_permutation(const Permutation& sigma, std::span<const std::size_t> sizes) {
  if (sigma.size() != sizes.size()) throw InvalidInput("block_permutation: size mismatch");
  std::vector<std::size_t> offset(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) offset[i + 1] = offset[i] + sizes[i];
  std::vector<std::size_t> images;
  images.reserve(offset.back());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const std::size_t src = sigma(i);
    for (std::size_t k = 0; k < sizes[src]; ++k) images.push_back(offset[src] + k);
  }
  return Permutation(std::move(images));
}

Rational min_cube_volume(const Configuration& c) {
  if (c.arity() == 0) throw InvalidInput("min_cube_volume of a configuration with no cubes");
  Rational best = c[0].volume();
  for (std::size_t i = 1; i < c.arity(); ++i) best = std::min(best, c[i].volume());
  return best;
}

}  // namespace lcubes
