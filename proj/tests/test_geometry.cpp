#include "doctest.h"
#include "lcubes/generate.hpp"
#include "lcubes/geometry.hpp"
#include "test_support.hpp"

using namespace lcubes;
using lcubes::testing::box1;
using lcubes::testing::box2;
using lcubes::testing::q;

TEST_CASE("rational parsing normalizes and rejects malformed text") {
  CHECK(Rational::parse("2/4").str() == "1/2");
  CHECK(Rational::parse("-3/6").str() == "-1/2");
  CHECK(Rational::parse("6/3").str() == "2");
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("+1/3") == Rational(1, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(pow(Rational(1, 2), 3) == Rational(1, 8));
}

TEST_CASE("intervals enforce 0 <= lo < hi <= 1") {
  CHECK_NOTHROW(Interval(0, 1));
  CHECK_THROWS_AS(Interval(q(1, 2), q(1, 2)), InvalidInput);
  CHECK_THROWS_AS(Interval(q(-1, 2), q(1, 2)), InvalidInput);
  CHECK_THROWS_AS(Interval(q(1, 2), q(3, 2)), InvalidInput);
}

TEST_CASE("configurations allow boundary contact but not overlap") {
  CHECK_NOTHROW(Configuration(1, {box1(0, 1, 1, 2), box1(1, 2, 1, 1)}));
  CHECK_THROWS_AS(Configuration(1, {box1(0, 1, 2, 3), box1(1, 2, 1, 1)}), InvalidInput);
  CHECK_THROWS_AS(Configuration(2, {box1(0, 1, 1, 1)}), InvalidInput);
  CHECK_THROWS_AS(Configuration(0, {}), InvalidInput);
  CHECK(Configuration(2, {}).arity() == 0);
}

TEST_CASE("identity is the full cube") {
  const auto id = identity(2);
  REQUIRE(id.arity() == 1);
  CHECK(id[0] == box2(0, 1, 1, 1, 0, 1, 1, 1));
  CHECK(id.is_identity());
}

TEST_CASE("box_apply composes affine embeddings") {
  CHECK(box_apply(box1(0, 1, 1, 2), box1(1, 3, 1, 1)) == box1(1, 6, 1, 2));
  CHECK(box_apply(box1(1, 2, 1, 1), box1(1, 3, 1, 1)) == box1(2, 3, 1, 1));
  const Box b = box2(1, 4, 1, 2, 1, 3, 2, 3);
  CHECK(box_apply(Box::full(2), b) == b);
  CHECK(box_unapply(box1(0, 1, 1, 2), box1(1, 6, 1, 2)) == box1(1, 3, 1, 1));
}

TEST_CASE("compose examples") {
  const Configuration halves(1, {box1(0, 1, 1, 2), box1(1, 2, 1, 1)});
  SUBCASE("unit laws") {
    CHECK(compose(identity(1), std::vector{halves}) == halves);
    CHECK(compose(halves, std::vector{identity(1), identity(1)}) == halves);
  }
  SUBCASE("plugging nullaries gives the nullary operation") {
    const auto r = compose(halves, std::vector{Configuration::nullary(1), Configuration::nullary(1)});
    CHECK(r.arity() == 0);
    CHECK(r.dim() == 1);
  }
  SUBCASE("interval arithmetic") {
    const auto r = compose(halves, std::vector{halves, identity(1)});
    const Configuration expected(1, {box1(0, 1, 1, 4), box1(1, 4, 1, 2), box1(1, 2, 1, 1)});
    CHECK(r == expected);
  }
  SUBCASE("arity and dimension mismatches") {
    CHECK_THROWS_AS(compose(halves, std::vector{identity(1)}), InvalidInput);
    CHECK_THROWS_AS(compose(halves, std::vector{identity(1), identity(2)}), InvalidInput);
  }
  SUBCASE("partial composition") {
    CHECK(compose_at(halves, 0, halves) == compose(halves, std::vector{halves, identity(1)}));
  }
}

TEST_CASE("symmetric action") {
  const Box a = box1(0, 1, 1, 2);
  const Box b = box1(1, 2, 1, 1);
  const Configuration c(1, {a, b});
  CHECK(act(c, Permutation::identity(2)) == c);
  CHECK(act(c, Permutation({1, 0})) == Configuration(1, {b, a}));
  CHECK_THROWS_AS(act(c, Permutation::identity(3)), InvalidInput);
  CHECK_THROWS_AS(Permutation({0, 0}), InvalidInput);
}

TEST_CASE("min_cube_volume") {
  CHECK(min_cube_volume(identity(2)) == Rational(1));
  const Configuration grid(2, {box2(0, 1, 1, 2, 0, 1, 1, 2), box2(0, 1, 1, 2, 1, 2, 1, 1), box2(1, 2, 1, 1, 0, 1, 1, 2),
                               box2(1, 2, 1, 1, 1, 2, 1, 1)});
  CHECK(min_cube_volume(grid) == q(1, 4));
  CHECK_THROWS_AS(min_cube_volume(Configuration::nullary(2)), InvalidInput);
}

TEST_CASE("operad laws on random instances") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    SplitMix64 rng(seed);
    const std::size_t d = rng.between(1, 3);
    const Configuration outer = random_op(rng, d, rng.between(1, 3), 8);
    std::vector<Configuration> inners;
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < outer.arity(); ++i) {
      inners.push_back(random_op(rng, d, rng.between(0, 3), 8));
      sizes.push_back(inners.back().arity());
    }
    const Configuration mid = compose(outer, inners);
    CHECK(check_configuration(mid.dim(), mid.cubes()).empty());

    std::vector<Configuration> leaves;
    for (std::size_t i = 0; i < mid.arity(); ++i) leaves.push_back(random_op(rng, d, rng.between(0, 2), 8));
    std::vector<Configuration> grouped;
    std::size_t pos = 0;
    for (const auto& inner : inners) {
      std::vector<Configuration> slice(leaves.begin() + static_cast<std::ptrdiff_t>(pos),
                                       leaves.begin() + static_cast<std::ptrdiff_t>(pos + inner.arity()));
      pos += inner.arity();
      grouped.push_back(compose(inner, slice));
    }
    CHECK(compose(mid, leaves) == compose(outer, grouped));

    const Permutation sigma = random_permutation(rng, outer.arity());
    std::vector<Configuration> permuted;
    for (std::size_t i = 0; i < outer.arity(); ++i) permuted.push_back(inners[sigma(i)]);
    CHECK(compose(act(outer, sigma), permuted) == act(mid, block_permutation(sigma, sizes)));

    const Permutation tau = random_permutation(rng, mid.arity());
    const Permutation rho = random_permutation(rng, mid.arity());
    CHECK(act(act(mid, tau), rho) == act(mid, tau * rho));
    CHECK(act(act(mid, tau), tau.inverse()) == mid);
  }
}
