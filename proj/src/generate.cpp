#include "lcubes/generate.hpp"

#include <algorithm>
#include <bit>

#include "lcubes/words.hpp"

namespace lcubes {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  // Rejection sampling keeps the distribution exactly uniform.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % n;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 a(seed);
  const std::uint64_t base = a.next();
  SplitMix64 b(base ^ (index * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL));
  return b.next();
}

Permutation random_permutation(SplitMix64& rng, std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(images[i - 1], images[rng.below(i)]);
  return Permutation(std::move(images));
}

namespace {

std::size_t dyadic_denominator(std::size_t bound) { return bound < 2 ? 2 : std::bit_floor(bound); }

Rational grid_point(std::size_t k, std::size_t den) { return Rational(static_cast<long>(k), static_cast<long>(den)); }

Interval random_interval(SplitMix64& rng, std::size_t den) {
  std::size_t a = rng.below(den + 1);
  std::size_t b = rng.below(den);
  if (b >= a) ++b;
  if (a > b) std::swap(a, b);
  return {grid_point(a, den), grid_point(b, den)};
}

// `arity` pairwise disjoint intervals on the grid, in random order.
std::optional<std::vector<Interval>> random_intervals(SplitMix64& rng, std::size_t arity, std::size_t den) {
  if (arity > den) return std::nullopt;
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<std::size_t> pts(2 * arity);
    for (auto& p : pts) p = rng.below(den + 1);
    std::sort(pts.begin(), pts.end());
    bool ok = true;
    for (std::size_t i = 0; i < arity && ok; ++i) ok = pts[2 * i] < pts[2 * i + 1];
    if (!ok) continue;
    std::vector<Interval> out;
    for (std::size_t i = 0; i < arity; ++i) out.emplace_back(grid_point(pts[2 * i], den), grid_point(pts[2 * i + 1], den));
    for (std::size_t i = out.size(); i > 1; --i) std::swap(out[i - 1], out[rng.below(i)]);
    return out;
  }
  return std::nullopt;
}

std::optional<std::vector<Box>> random_boxes(SplitMix64& rng, std::size_t dim, std::size_t count, std::size_t den) {
  for (int restart = 0; restart < 40; ++restart) {
    std::vector<Box> boxes;
    int attempts = 0;
    while (boxes.size() < count && attempts < 400) {
      ++attempts;
      std::vector<Interval> ivs;
      for (std::size_t a = 0; a < dim; ++a) ivs.push_back(random_interval(rng, den));
      Box candidate(std::move(ivs));
      const bool clear = std::none_of(boxes.begin(), boxes.end(), [&](const Box& b) { return b.overlaps(candidate); });
      if (clear) boxes.push_back(std::move(candidate));
    }
    if (boxes.size() == count) return boxes;
  }
  return std::nullopt;
}

TensorWord insert_at_leaf(const TensorWord& w, std::size_t& index, const Generator& gen) {
  if (w.is_leaf()) {
    if (index-- != 0) return w;
    std::vector<TensorWord> kids(gen.op.arity(), TensorWord::leaf(0));
    return TensorWord::node(gen, std::move(kids));
  }
  std::vector<TensorWord> kids;
  kids.reserve(w.children().size());
  for (const auto& c : w.children()) kids.push_back(insert_at_leaf(c, index, gen));
  return TensorWord::node(w.generator(), std::move(kids));
}

TensorWord number_leaves(const TensorWord& w, std::size_t& next) {
  if (w.is_leaf()) return TensorWord::leaf(next++);
  std::vector<TensorWord> kids;
  for (const auto& c : w.children()) kids.push_back(number_leaves(c, next));
  return TensorWord::node(w.generator(), std::move(kids));
}

}  // namespace

Configuration random_op(SplitMix64& rng, std::size_t dim, std::size_t arity, std::size_t denominator) {
  const std::size_t den = dyadic_denominator(denominator);
  if (arity == 0) return Configuration::nullary(dim);
  if (dim >= 2 && rng.coin()) {
    if (auto boxes = random_boxes(rng, dim, arity, den)) return Configuration(dim, std::move(*boxes), unchecked);
  }
  // Slabs along one random axis, random extent on the others.
  auto slabs = random_intervals(rng, arity, den);
  if (!slabs) throw InvalidInput("random_op: arity " + std::to_string(arity) + " too large for denominator " + std::to_string(den));
  const std::size_t axis = rng.below(dim);
  std::vector<Box> boxes;
  for (auto& iv : *slabs) {
    std::vector<Interval> ivs;
    for (std::size_t a = 0; a < dim; ++a) ivs.push_back(a == axis ? iv : random_interval(rng, den));
    boxes.emplace_back(std::move(ivs));
  }
  return Configuration(dim, std::move(boxes), unchecked);
}

TensorWord gen_word(const GenParams& params) {
  SplitMix64 rng(params.seed);
  return gen_word(rng, params);
}

TensorWord gen_word(SplitMix64& rng, const GenParams& params) {
  TensorWord w = TensorWord::leaf(0);
  if (params.max_generators == 0) return w;
  const std::size_t count = rng.between(1, params.max_generators);
  for (std::size_t g = 0; g < count; ++g) {
    const std::size_t leaves = w.arity();
    if (leaves == 0) break;
    const std::size_t room = params.max_leaves >= leaves ? params.max_leaves - leaves + 1 : 1;
    const std::size_t hi = std::min(params.max_arity_per_generator, room);
    const std::size_t lo = params.allow_nullary ? 0 : 1;
    const std::size_t arity = hi < lo ? lo : rng.between(lo, hi);
    const std::size_t block = rng.below(params.blocks.count());
    Generator gen{block, random_op(rng, params.blocks.size(block), arity, params.coordinate_denominator_bound)};
    std::size_t index = rng.below(leaves);
    w = insert_at_leaf(w, index, gen);
  }
  std::size_t next = 0;
  w = number_leaves(w, next);
  const Permutation sigma = random_permutation(rng, next);
  return relabel(w, sigma.images());
}

Configuration pinwheel() {
  const auto r = [](long n, long d) { return Rational(n, d); };
  std::vector<Box> cubes{
      Box({Interval(0, r(2, 3)), Interval(0, r(1, 3))}),
      Box({Interval(r(2, 3), 1), Interval(0, r(2, 3))}),
      Box({Interval(r(1, 3), 1), Interval(r(2, 3), 1)}),
      Box({Interval(0, r(1, 3)), Interval(r(1, 3), 1)}),
  };
  return Configuration(2, std::move(cubes));
}

Configuration gen_config(std::uint64_t seed, std::size_t dim, std::size_t j, bool want_pinwheel) {
  if (want_pinwheel) {
    if (dim != 2 || j != 4) throw InvalidInput("pinwheel preset requires dim 2 and j 4");
    return pinwheel();
  }
  SplitMix64 rng(seed);
  return gen_config(rng, dim, j);
}

Configuration gen_config(SplitMix64& rng, std::size_t dim, std::size_t j) {
  if (dim == 0) throw InvalidInput("gen_config: dimension must be positive");
  if (j == 0) return Configuration::nullary(dim);
  for (std::size_t den = 16; den <= 1024; den *= 4) {
    if (auto boxes = random_boxes(rng, dim, j, den)) return Configuration(dim, std::move(*boxes), unchecked);
  }
  throw InvalidInput("gen_config: could not place " + std::to_string(j) + " disjoint cubes");
}

Configuration gen_mixed_config(SplitMix64& rng, std::size_t max_cubes) {
  if (max_cubes < 4) throw InvalidInput("gen_mixed_config: needs room for at least 4 cubes");
  switch (rng.below(3)) {
    case 0: {
      GenParams p;
      p.max_leaves = max_cubes;
      return eval(gen_word(rng, p), p.blocks);
    }
    case 1:
      return gen_config(rng, 2, rng.between(1, max_cubes));
    default:
      break;
  }
  // Random pinwheel: cut points x1 < x2, y1 < y2 on a 1/16 grid.
  const std::size_t den = 16;
  std::size_t x1 = rng.between(1, den - 2);
  std::size_t x2 = rng.between(x1 + 1, den - 1);
  std::size_t y1 = rng.between(1, den - 2);
  std::size_t y2 = rng.between(y1 + 1, den - 1);
  const auto g = [&](std::size_t k) { return grid_point(k, den); };
  std::vector<Box> cubes{
      Box({Interval(0, g(x2)), Interval(0, g(y1))}),
      Box({Interval(g(x2), 1), Interval(0, g(y2))}),
      Box({Interval(g(x1), 1), Interval(g(y2), 1)}),
      Box({Interval(0, g(x1)), Interval(g(y1), 1)}),
  };
  // Shrinking a cube may break the pinwheel; that keeps both outcomes in the mix.
  if (rng.coin()) {
    const std::size_t victim = rng.below(cubes.size());
    std::vector<Interval> ivs;
    for (const auto& iv : cubes[victim].intervals()) {
      const Rational len = iv.length();
      const Rational lo = iv.lo() + len * grid_point(rng.below(4), 8);
      const Rational hi = iv.hi() - len * grid_point(rng.below(4), 8);
      ivs.emplace_back(lo, hi);
    }
    cubes[victim] = Box(std::move(ivs));
  }
  if (max_cubes >= 5 && rng.coin()) {
    cubes.push_back(Box({Interval(g(x1), g(x2)), Interval(g(y1), g(y2))}));
  }
  Configuration c(2, std::move(cubes));
  return act(c, random_permutation(rng, c.arity()));
}

}  // namespace lcubes
