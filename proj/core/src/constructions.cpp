#include "optiframe/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "optiframe/enumeration.hpp"
#include "optiframe/errors.hpp"

namespace optiframe {
namespace {

constexpr double kPi = std::numbers::pi;

void check_index(std::size_t j, std::size_t m) {
  if (m < 1 || j < 1 || j > m) {
    throw InvalidArgument("index " + std::to_string(j) + " outside [1, " + std::to_string(m) + "]");
  }
}

void check_solution(const SignVector& eps) {
  if (!has_odd_factor(eps.m())) {
    throw NoOddFactor("m = " + std::to_string(eps.m()) + " is a power of two");
  }
  if (!sign_sum_is_zero(eps)) throw NotASolution("sum eps_j zeta^j does not vanish");
}

}  // namespace

Frame harmonic_frame(std::size_t m) {
  if (m < 3) throw InvalidArgument("harmonic frame needs m >= 3");
  std::vector<Vec2> rows;
  rows.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    rows.push_back(unit_at(static_cast<double>(k) * kPi / static_cast<double>(m)));
  }
  return Frame(std::move(rows));
}

Vec2 mu(std::size_t j, std::size_t m) {
  check_index(j, m);
  return unit_at(static_cast<double>(j) * kPi / static_cast<double>(m));
}

Vec2 nu(std::size_t j, std::size_t m) {
  check_index(j, m);
  return unit_at(static_cast<double>(j) * kPi / (2.0 * static_cast<double>(m)));
}

Vec2 nu_perp(std::size_t j, std::size_t m) {
  const Vec2 v = nu(j, m);
  return {-v.y, v.x};
}

ConvexPolygon optimal_polygon_from_sign(const SignVector& eps) {
  check_solution(eps);
  std::vector<Vec2> edges;
  edges.reserve(eps.m());
  for (std::size_t j = 1; j <= eps.m(); ++j) {
    edges.push_back(static_cast<double>(eps[j - 1]) * mu(j, eps.m()));
  }
  ConvexPolygon polygon = polygon_from_edges(EdgeSet(std::move(edges)));
  if (equilateral_defect(polygon) > 1e-12) {
    throw NotStrictlyConvex("constructed polygon is not equilateral");
  }
  return polygon;
}

Frame optimal_frame_from_sign(const SignVector& eps) {
  check_solution(eps);
  std::vector<Vec2> rows;
  rows.reserve(eps.m());
  for (std::size_t j = 1; j <= eps.m(); ++j) {
    rows.push_back(eps[j - 1] == 1 ? nu(j, eps.m()) : nu_perp(j, eps.m()));
  }
  return Frame(std::move(rows));
}

ConvexPolygon frame_to_polygon(const Frame& frame) {
  if (!is_tight(frame).tight) throw NotTight("frame_to_polygon needs a tight frame");
  if (!is_irreducible(frame)) throw NotIrreducible("frame has a zero or repeated direction");
  return polygon_from_edges(EdgeSet(frame_edges(frame)), 3.0 * kTightTol);
}

Frame polygon_to_frame(const ConvexPolygon& polygon) {
  std::vector<Vec2> rows;
  rows.reserve(polygon.m());
  for (const Vec2& e : polygon.edges().edges()) rows.push_back(edge_to_half(e).to_cartesian());
  return Frame(std::move(rows));
}

Frame optimal_frame_m4() {
  const double s = std::sqrt(2.0 * std::sin(kPi / 12.0));
  return Frame({
      {-1.0, 0.0},
      unit_at(2.0 * kPi / 3.0),
      s * unit_at(3.0 * kPi / 8.0),
      s * unit_at(7.0 * kPi / 24.0),
  });
}

ConvexPolygon optimal_polygon_m4() { return frame_to_polygon(optimal_frame_m4()); }

OptimalPair make_optimal_pair(const SignVector& eps) {
  ConvexPolygon polygon = optimal_polygon_from_sign(eps);
  Frame frame = optimal_frame_from_sign(eps);
  const double r = ratio_r(polygon);
  const double beta = condition_number_tight(frame).beta;
  return OptimalPair{eps, std::move(polygon), std::move(frame), beta, r};
}

std::vector<double> angles_mod_pi(const Frame& frame) {
  std::vector<double> angles;
  angles.reserve(frame.m());
  for (const Vec2& v : frame.vectors()) {
    double a = std::fmod(v.angle(), kPi);
    if (a < 0.0) a += kPi;
    angles.push_back(a);
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

double equilateral_defect(const ConvexPolygon& polygon) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const Vec2& e : polygon.edges().edges()) {
    lo = std::min(lo, e.norm());
    hi = std::max(hi, e.norm());
  }
  return hi / lo - 1.0;
}

}  // namespace optiframe
