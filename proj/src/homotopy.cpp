#include "lcubes/homotopy.hpp"

namespace lcubes {

Configuration contract(const Configuration& c, const Rational& t) {
  if (t < Rational(0) || !(t < Rational(1))) throw InvalidInput("contract: parameter must satisfy 0 <= t < 1, got " + t.str());
  const Rational keep = Rational(1) - t;
  std::vector<Box> cubes;
  cubes.reserve(c.arity());
  for (const auto& box : c.cubes()) {
    std::vector<Interval> ivs;
    ivs.reserve(box.dim());
    for (const auto& iv : box.intervals()) {
      const Rational center = (iv.lo() + iv.hi()) / Rational(2);
      const Rational half = keep * iv.length() / Rational(2);
      ivs.emplace_back(center - half, center + half);
    }
    cubes.emplace_back(std::move(ivs));
  }
  return Configuration(c.dim(), std::move(cubes), unchecked);
}

ContractionReport decomposability_threshold(const Configuration& c, const AxisBlocks& blocks, std::size_t grid) {
  if (grid == 0) throw InvalidInput("decomposability_threshold: grid must be positive");
  if (c.arity() == 0) throw InvalidInput("decomposability_threshold: configuration has no cubes");
  for (std::size_t i = 0; i < grid; ++i) {
    const Rational t(static_cast<long>(i), static_cast<long>(grid));
    auto result = factor(contract(c, t), blocks);
    if (result.decomposable()) return ContractionReport{c, blocks, t, grid, result.word()};
  }
  throw ThresholdNotFound("no contraction i/" + std::to_string(grid) + " is decomposable; increase grid");
}

}  // namespace lcubes
