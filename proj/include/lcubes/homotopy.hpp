#pragma once

#include <cstddef>
#include <stdexcept>

#include "lcubes/factorization.hpp"
#include "lcubes/geometry.hpp"
#include "lcubes/words.hpp"

namespace lcubes {

/// Scales every box about its own center by (1 - t). Requires 0 <= t < 1.
Configuration contract(const Configuration& c, const Rational& t);

struct ContractionReport {
  Configuration config;
  AxisBlocks blocks;
  Rational threshold;
  std::size_t grid;
  TensorWord certificate;
};

/// No grid point i/grid made the configuration decomposable.
class ThresholdNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// First t in 0, 1/grid, ..., (grid-1)/grid with contract(c, t)
/// decomposable; the certificate is the canonical word at that t.
/// Grid scan rather than bisection: decomposability need not be monotone in t.
ContractionReport decomposability_threshold(const Configuration& c, const AxisBlocks& blocks, std::size_t grid);

}  // namespace lcubes
