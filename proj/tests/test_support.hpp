#pragma once

#include <vector>

#include "lcubes/geometry.hpp"
#include "lcubes/words.hpp"

namespace lcubes::testing {

inline Rational q(long num, long den) { return Rational(num, den); }

inline Interval iv(long ln, long ld, long hn, long hd) { return Interval(q(ln, ld), q(hn, hd)); }

inline Box box1(long ln, long ld, long hn, long hd) { return Box({iv(ln, ld, hn, hd)}); }

inline Box box2(long xln, long xld, long xhn, long xhd, long yln, long yld, long yhn, long yhd) {
  return Box({iv(xln, xld, xhn, xhd), iv(yln, yld, yhn, yhd)});
}

/// The two halves of the unit interval.
inline Configuration halves() { return Configuration(1, {box1(0, 1, 1, 2), box1(1, 2, 1, 1)}); }

inline Configuration unary1(long ln, long ld, long hn, long hd) { return Configuration(1, {box1(ln, ld, hn, hd)}); }

/// Labeled 2x2 grid: L1 bottom-left, L2 top-left, L3 bottom-right, L4 top-right.
inline Configuration grid2x2() {
  return Configuration(2, {box2(0, 1, 1, 2, 0, 1, 1, 2), box2(0, 1, 1, 2, 1, 2, 1, 1), box2(1, 2, 1, 1, 0, 1, 1, 2),
                           box2(1, 2, 1, 1, 1, 2, 1, 1)});
}

inline TensorWord gen(std::size_t block, Configuration op, std::vector<TensorWord> children) {
  return TensorWord::node(Generator{block, std::move(op)}, std::move(children));
}

inline TensorWord leaf(std::size_t label) { return TensorWord::leaf(label); }

/// (p (x) 1)[(1 (x) q)[L1,L2], (1 (x) q)[L3,L4]] with p = q = halves.
inline TensorWord w1() {
  return gen(0, halves(), {gen(1, halves(), {leaf(0), leaf(1)}), gen(1, halves(), {leaf(2), leaf(3)})});
}

/// (1 (x) q)[(p (x) 1)[L1,L3], (p (x) 1)[L2,L4]].
inline TensorWord w2() {
  return gen(1, halves(), {gen(0, halves(), {leaf(0), leaf(2)}), gen(0, halves(), {leaf(1), leaf(3)})});
}

}  // namespace lcubes::testing
