#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "optiframe/constructions.hpp"

namespace optiframe::svg {
namespace {

// Unit length in pixels: a unit-diameter polygon fills 70% of the canvas.
constexpr double kScale = 0.7 * kCanvas;

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
  std::string s(buf);
  return s == "-0.000000" ? "0.000000" : s;
}

struct View {
  Vec2 center;
  double scale = kScale;

  Vec2 map(Vec2 p) const {
    const Vec2 q = scale * (p - center);
    return {kCanvas / 2.0 + q.x, kCanvas / 2.0 - q.y};
  }
};

void open(std::ostringstream& out) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\""
      << kCanvas << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void draw_polygon(std::ostringstream& out, const ConvexPolygon& p, const View& view) {
  out << "  <polygon fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  bool first = true;
  for (const Vec2& v : p.vertices()) {
    const Vec2 q = view.map(v);
    out << (first ? "" : " ") << num(q.x) << ',' << num(q.y);
    first = false;
  }
  out << "\"/>\n";

  for (const auto& [i, j] : diameter_pairs(p)) {
    const Vec2 a = view.map(p.vertices()[i]);
    const Vec2 b = view.map(p.vertices()[j]);
    out << "  <line class=\"diameter\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\""
        << num(b.x) << "\" y2=\"" << num(b.y)
        << "\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
  }
}

Vec2 bbox_center(std::span<const Vec2> pts) {
  Vec2 lo = pts.front();
  Vec2 hi = pts.front();
  for (const Vec2& v : pts) {
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::string polygon_figure(const ConvexPolygon& polygon) {
  std::ostringstream out;
  open(out);
  const View view{bbox_center(polygon.vertices()), kScale / diameter(polygon)};
  draw_polygon(out, polygon, view);
  out << "</svg>\n";
  return out.str();
}

std::string frame_figure(const Frame& frame) {
  std::ostringstream out;
  open(out);
  out << "  <defs>\n"
      << "    <marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"8\""
         " markerHeight=\"8\" orient=\"auto\">\n"
      << "      <path d=\"M0,0 L10,5 L0,10 z\" fill=\"steelblue\"/>\n"
      << "    </marker>\n"
      << "  </defs>\n";

  double longest = 0.0;
  for (const Vec2& v : frame.vectors()) longest = std::max(longest, v.norm());
  const View view{{0.0, 0.0}, longest > 0.0 ? 0.45 * kCanvas / longest : 1.0};

  const Vec2 o = view.map({0.0, 0.0});
  for (const Vec2& v : frame.vectors()) {
    const Vec2 tip = view.map(v);
    out << "  <line class=\"vector\" x1=\"" << num(o.x) << "\" y1=\"" << num(o.y) << "\" x2=\""
        << num(tip.x) << "\" y2=\"" << num(tip.y)
        << "\" stroke=\"steelblue\" stroke-width=\"2\" marker-end=\"url(#head)\"/>\n";
  }
  out << "  <circle cx=\"" << num(o.x) << "\" cy=\"" << num(o.y) << "\" r=\"3\" fill=\"black\"/>\n"
      << "</svg>\n";
  return out.str();
}

}  // namespace optiframe::svg
