#include "doctest.h"
#include "lcubes/generate.hpp"
#include "lcubes/homotopy.hpp"
#include "test_support.hpp"

using namespace lcubes;
using namespace lcubes::testing;

namespace {

const AxisBlocks kB11({1, 1});

// Smallest i/64 at which the contracted pinwheel factors; frozen from a grid scan.
const Rational kPinwheelThreshold64 = Rational(1, 2);

}  // namespace

TEST_CASE("contract examples") {
  const Configuration c(2, {box2(0, 1, 1, 2, 0, 1, 1, 2)});
  CHECK(contract(c, 0) == c);
  const auto r = contract(c, q(1, 2));
  CHECK(r == Configuration(2, {box2(1, 8, 3, 8, 1, 8, 3, 8)}));
  CHECK(r[0].volume() == q(1, 16));
  CHECK_THROWS_AS(contract(c, 1), InvalidInput);
  CHECK_THROWS_AS(contract(c, q(-1, 2)), InvalidInput);
}

TEST_CASE("contracted pinwheel") {
  const auto r = contract(pinwheel(), q(1, 2));
  const Configuration expected(2, {box2(1, 6, 1, 2, 1, 12, 1, 4), box2(3, 4, 11, 12, 1, 6, 1, 2),
                                   box2(1, 2, 5, 6, 3, 4, 11, 12), box2(1, 12, 1, 4, 1, 2, 5, 6)});
  CHECK(r == expected);
  const auto f = factor(r, kB11);
  REQUIRE(f.decomposable());
  CHECK(eval(f.word(), kB11) == r);
  const auto top = strip_grouping(r, kB11, 0);
  CHECK(top.hulls == std::vector<Box>{box1(1, 12, 1, 2), box1(1, 2, 11, 12)});
}

TEST_CASE("decomposability_threshold") {
  SUBCASE("already decomposable") {
    const auto rep = decomposability_threshold(grid2x2(), kB11, 8);
    CHECK(rep.threshold == Rational(0));
    CHECK(rep.certificate == w1());
  }
  SUBCASE("pinwheel grid 2") {
    const auto rep = decomposability_threshold(pinwheel(), kB11, 2);
    CHECK(rep.threshold == q(1, 2));
    CHECK(eval(rep.certificate, kB11) == contract(pinwheel(), q(1, 2)));
  }
  SUBCASE("pinwheel grid 64") {
    const auto rep = decomposability_threshold(pinwheel(), kB11, 64);
    CHECK(rep.threshold == kPinwheelThreshold64);
    CHECK(rep.grid == 64);
  }
  SUBCASE("grid too coarse") {
    CHECK_THROWS_AS(decomposability_threshold(pinwheel(), kB11, 1), ThresholdNotFound);
    CHECK_THROWS_AS(decomposability_threshold(pinwheel(), kB11, 0), InvalidInput);
  }
}

TEST_CASE("contraction scales volumes and preserves validity") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    SplitMix64 rng(s);
    const std::size_t d = rng.between(1, 3);
    const auto c = gen_config(rng, d, rng.between(1, 5));
    const Rational t(static_cast<long>(rng.below(16)), 16);
    const auto r = contract(c, t);
    CHECK(check_configuration(r.dim(), r.cubes()).empty());
    for (std::size_t i = 0; i < c.arity(); ++i) CHECK(r[i].volume() == pow(Rational(1) - t, static_cast<unsigned>(d)) * c[i].volume());
  }
}
