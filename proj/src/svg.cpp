#include "lcubes/svg.hpp"

#include <cstdio>
#include <sstream>

namespace lcubes {

namespace {

constexpr double kSize = 512.0;
constexpr const char* kOrange = "#f4a340";
constexpr const char* kBlue = "#6ec6ff";
constexpr const char* kRed = "#d62728";

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Rect {
  double x, y, w, h;
};

Rect to_screen(const Box& b) {
  const double x0 = b[0].lo().to_double();
  const double x1 = b[0].hi().to_double();
  const double y0 = b[1].lo().to_double();
  const double y1 = b[1].hi().to_double();
  return {x0 * kSize, (1.0 - y1) * kSize, (x1 - x0) * kSize, (y1 - y0) * kSize};
}

void rect(std::ostringstream& out, const Rect& r, const std::string& style) {
  out << "  <rect x=\"" << num(r.x) << "\" y=\"" << num(r.y) << "\" width=\"" << num(r.w) << "\" height=\""
      << num(r.h) << "\" " << style << "/>\n";
}

Box strip_box(const Box& hull, const AxisBlocks& blocks, std::size_t block) {
  std::vector<Interval> ivs(2, Interval::full());
  for (std::size_t a = 0; a < hull.dim(); ++a) ivs[blocks.offset(block) + a] = hull[a];
  return Box(std::move(ivs));
}

}  // namespace

std::string render_svg(const Configuration& c, const AxisBlocks& blocks, std::span<const StripGrouping> overlays) {
  if (c.dim() != 2) throw InvalidInput("render_svg: only dimension 2 can be drawn, got " + std::to_string(c.dim()));
  if (blocks.dim() != 2) throw InvalidInput("render_svg: blocks must have total dimension 2");
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kSize) << "\" height=\""
      << num(kSize) << "\" viewBox=\"0 0 " << num(kSize) << " " << num(kSize) << "\">\n";
  rect(out, {0, 0, kSize, kSize}, "fill=\"white\" stroke=\"black\" stroke-width=\"2\"");
  for (std::size_t i = 0; i < c.arity(); ++i) {
    const Rect r = to_screen(c[i]);
    rect(out, r, std::string("class=\"cube\" fill=\"") + kOrange + "\" stroke=\"black\" stroke-width=\"1\"");
    out << "  <text x=\"" << num(r.x + r.w / 2) << "\" y=\"" << num(r.y + r.h / 2)
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
        << (i + 1) << "</text>\n";
  }
  for (const auto& g : overlays) {
    if (g.groups.size() < 2) continue;
    const char* color = g.block == 0 ? kBlue : kRed;
    for (const auto& hull : g.hulls) {
      rect(out, to_screen(strip_box(hull, blocks, g.block)),
           std::string("class=\"strip-block") + std::to_string(g.block + 1) + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"3\"");
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace lcubes
