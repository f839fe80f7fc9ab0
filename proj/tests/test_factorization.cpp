#include "doctest.h"
#include "lcubes/factorization.hpp"
#include "lcubes/generate.hpp"
#include "test_support.hpp"

using namespace lcubes;
using namespace lcubes::testing;

namespace {

const AxisBlocks kB11({1, 1});

Configuration diagonal() { return Configuration(2, {box2(0, 1, 1, 2, 0, 1, 1, 2), box2(1, 2, 1, 1, 1, 2, 1, 1)}); }

}  // namespace

TEST_CASE("strip_grouping examples") {
  SUBCASE("disjoint projections") {
    const auto g = strip_grouping(diagonal(), kB11, 0);
    CHECK(g.groups == std::vector<std::vector<std::size_t>>{{0}, {1}});
    CHECK(g.hulls == std::vector<Box>{box1(0, 1, 1, 2), box1(1, 2, 1, 1)});
  }
  SUBCASE("interval overlap components") {
    // x-projections ]0,1/4[, ]1/8,3/8[, ]1/2,1[; the first two are stacked in y.
    const Configuration c(2, {box2(0, 1, 1, 4, 0, 1, 1, 2), box2(1, 8, 3, 8, 1, 2, 1, 1), box2(1, 2, 1, 1, 0, 1, 1, 1)});
    const auto g = strip_grouping(c, kB11, 0);
    CHECK(g.groups == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
    CHECK(g.hulls == std::vector<Box>{box1(0, 1, 3, 8), box1(1, 2, 1, 1)});
  }
  SUBCASE("pinwheel has a single group on both axes") {
    for (std::size_t b = 0; b < 2; ++b) {
      CHECK(strip_grouping(pinwheel(), kB11, b).groups == std::vector<std::vector<std::size_t>>{{0, 1, 2, 3}});
    }
  }
  SUBCASE("hull closure merges groups whose hulls meet") {
    // In the xy block, cube 3 overlaps neither cube 1 nor cube 2 but lies in their hull.
    const AxisBlocks b21({2, 1});
    auto box3 = [](Interval x, Interval y, Interval z) { return Box({x, y, z}); };
    const Configuration c(3, {box3(iv(0, 1, 1, 2), iv(0, 1, 1, 4), iv(0, 1, 1, 2)),
                              box3(iv(1, 4, 1, 2), iv(0, 1, 1, 2), iv(1, 2, 1, 1)),
                              box3(iv(0, 1, 1, 4), iv(1, 4, 1, 2), iv(0, 1, 1, 1)),
                              box3(iv(1, 2, 1, 1), iv(0, 1, 1, 1), iv(0, 1, 1, 1))});
    const auto g = strip_grouping(c, b21, 0);
    CHECK(g.groups == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3}});
    CHECK(g.hulls.front() == box2(0, 1, 1, 2, 0, 1, 1, 2));
    // Inside that hull the three cubes form an L in xy and share no z cut.
    CHECK_FALSE(is_decomposable(c, b21));
    CHECK_FALSE(brute_force_decomposable(c, b21));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(strip_grouping(Configuration::nullary(2), kB11, 0), InvalidInput);
    CHECK_THROWS_AS(strip_grouping(diagonal(), kB11, 2), InvalidInput);
  }
}

TEST_CASE("close_groups on boxes that only touch") {
  const std::vector<Box> proj{box1(0, 1, 1, 2), box1(1, 2, 1, 1)};
  CHECK(close_groups(proj, {{1}, {0}}) == std::vector<std::vector<std::size_t>>{{0}, {1}});
}

TEST_CASE("factor examples") {
  SUBCASE("two cubes split by x = 1/2") {
    const auto r = factor(diagonal(), kB11);
    REQUIRE(r.decomposable());
    const auto expected =
        gen(0, halves(), {gen(1, unary1(0, 1, 1, 2), {leaf(0)}), gen(1, unary1(1, 2, 1, 1), {leaf(1)})});
    CHECK(r.word() == expected);
  }
  SUBCASE("single cube") {
    const Configuration c(2, {box2(1, 4, 1, 2, 1, 3, 2, 3)});
    const auto r = factor(c, kB11);
    REQUIRE(r.decomposable());
    CHECK(r.word() == gen(0, unary1(1, 4, 1, 2), {gen(1, unary1(1, 3, 2, 3), {leaf(0)})}));
  }
  SUBCASE("full projections are omitted") {
    const Configuration c(2, {box2(0, 1, 1, 1, 1, 3, 2, 3)});
    CHECK(factor(c, kB11).word() == gen(1, unary1(1, 3, 2, 3), {leaf(0)}));
    CHECK(factor(identity(2), kB11).word() == leaf(0));
  }
  SUBCASE("nullary") {
    const auto r = factor(Configuration::nullary(2), kB11);
    REQUIRE(r.decomposable());
    CHECK(eval(r.word(), kB11) == Configuration::nullary(2));
  }
  SUBCASE("grid") {
    const auto r = factor(grid2x2(), kB11);
    REQUIRE(r.decomposable());
    CHECK(r.word() == w1());
  }
  SUBCASE("pinwheel") {
    const auto r = factor(pinwheel(), kB11);
    REQUIRE_FALSE(r.decomposable());
    CHECK(r.witness().labels == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(r.witness().single_groups.size() == 2);
  }
  SUBCASE("pinwheel nested inside a split") {
    // Left half holds a shrunken pinwheel, right half a single cube.
    std::vector<Box> cubes;
    const Box left = box2(0, 1, 1, 2, 0, 1, 1, 1);
    const Configuration pin = pinwheel();
    for (const auto& b : pin.cubes()) cubes.push_back(box_apply(left, b));
    cubes.push_back(box2(1, 2, 1, 1, 0, 1, 1, 1));
    const auto r = factor(Configuration(2, cubes), kB11);
    REQUIRE_FALSE(r.decomposable());
    CHECK(r.witness().labels == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(r.witness().stuck == pinwheel());
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(factor(identity(3), kB11), InvalidInput);
  }
}

TEST_CASE("is_decomposable and brute force") {
  CHECK(is_decomposable(grid2x2(), kB11));
  CHECK_FALSE(is_decomposable(pinwheel(), kB11));
  CHECK(brute_force_decomposable(grid2x2(), kB11));
  CHECK_FALSE(brute_force_decomposable(pinwheel(), kB11));
  CHECK(is_decomposable(Configuration(2, {box2(1, 8, 1, 4, 1, 2, 3, 4)}), kB11));
  CHECK(is_decomposable(Configuration::nullary(2), kB11));
  CHECK(brute_force_decomposable(Configuration::nullary(2), kB11));
  CHECK_THROWS_AS(brute_force_decomposable(gen_config(1, 2, 7), kB11, 6), InvalidInput);
}

TEST_CASE("brute force agrees with factor on mixed random configurations") {
  std::size_t yes = 0, no = 0;
  for (std::uint64_t s = 0; s < 300; ++s) {
    SplitMix64 rng(derive_seed(11, s));
    const auto c = gen_mixed_config(rng, 5);
    const bool fast = is_decomposable(c, kB11);
    CHECK(fast == brute_force_decomposable(c, kB11));
    (fast ? yes : no)++;
  }
  CHECK(yes > 0);
  CHECK(no > 0);
}

TEST_CASE("factor round-trips evaluated random words") {
  for (const char* spec : {"1,1", "1,2", "2,1", "2,2", "1,1,1"}) {
    GenParams p;
    p.blocks = AxisBlocks::parse(spec);
    p.allow_nullary = true;
    p.max_generators = 6;
    for (std::uint64_t s = 0; s < 150; ++s) {
      p.seed = s;
      const auto c = eval(gen_word(p), p.blocks);
      const auto r = factor(c, p.blocks);
      REQUIRE(r.decomposable());
      CHECK(eval(r.word(), p.blocks) == c);
      CHECK(factor(eval(r.word(), p.blocks), p.blocks).word() == r.word());
    }
  }
}

TEST_CASE("factor is equivariant up to ordering of node inputs") {
  GenParams p;
  for (std::uint64_t s = 0; s < 200; ++s) {
    p.seed = s;
    const auto c = eval(gen_word(p), kB11);
    SplitMix64 rng(s);
    const auto sigma = random_permutation(rng, c.arity());
    const auto lhs = factor(act(c, sigma), kB11).word();
    const auto inv = sigma.inverse();
    std::vector<std::size_t> map(c.arity());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = inv(i);
    const auto rhs = relabel(factor(c, kB11).word(), map);
    CHECK(order_by_cubes(lhs) == order_by_cubes(rhs));
  }
}

TEST_CASE("common_refinement") {
  const Configuration p = halves();
  const Configuration pbar(1, {box1(0, 1, 1, 3), box1(2, 3, 1, 1)});
  const Configuration c(2, {box2(0, 1, 1, 4, 0, 1, 1, 1), box2(3, 4, 1, 1, 0, 1, 1, 1)});

  SUBCASE("wedge example") {
    const auto r = common_refinement(p, pbar, c, kB11, 0);
    CHECK(r.wedge == pbar);
    REQUIRE(r.p_parts.size() == 2);
    CHECK(r.p_parts[0] == unary1(0, 1, 2, 3));
    CHECK(r.p_parts[1] == unary1(1, 3, 1, 1));
    CHECK(box_apply(p[0], r.p_parts[0][0]) == box1(0, 1, 1, 3));
    CHECK(box_apply(p[1], r.p_parts[1][0]) == box1(2, 3, 1, 1));
    CHECK(act(compose(p, r.p_parts), r.p_order) == r.wedge);
    CHECK(act(compose(pbar, r.pbar_parts), r.pbar_order) == r.wedge);
    for (const auto& part : r.pbar_parts) CHECK(part == identity(1));
  }
  SUBCASE("idempotence") {
    const auto r = common_refinement(p, p, c, kB11, 0);
    CHECK(r.wedge == p);
    for (const auto& part : r.p_parts) CHECK(part == identity(1));
    for (const auto& part : r.pbar_parts) CHECK(part == identity(1));
  }
  SUBCASE("projection touching an inner face of p") {
    const Configuration touching(2, {box2(1, 4, 1, 2, 0, 1, 1, 1)});
    CHECK_THROWS_AS(common_refinement(p, p, touching, kB11, 0), InvalidInput);
  }
}
