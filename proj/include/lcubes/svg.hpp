#pragma once

#include <span>
#include <string>

#include "lcubes/factorization.hpp"
#include "lcubes/geometry.hpp"

namespace lcubes {

/// SVG 1.1 drawing of a 2-dimensional configuration in the unit square
/// (y pointing up). Cubes are filled orange and labeled 1..j. Each overlay
/// with at least two groups is drawn as outlined strips: block 1 light blue,
/// block 2 red. Output bytes depend only on the input.
/// Throws InvalidInput unless c.dim() == 2.
std::string render_svg(const Configuration& c, const AxisBlocks& blocks, std::span<const StripGrouping> overlays = {});

}  // namespace lcubes
