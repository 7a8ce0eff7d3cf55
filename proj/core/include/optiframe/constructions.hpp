#pragma once

#include <cstddef>
#include <vector>

#include "optiframe/cyclotomic.hpp"
#include "optiframe/frames.hpp"
#include "optiframe/geometry.hpp"

namespace optiframe {

/// Rows (cos(k pi/m), sin(k pi/m)), k = 0..m-1.
Frame harmonic_frame(std::size_t m);

/// mu_j = (cos(j pi/m), sin(j pi/m)), 1 <= j <= m.
Vec2 mu(std::size_t j, std::size_t m);
/// nu_j = (cos(j pi/2m), sin(j pi/2m)), 1 <= j <= m.
Vec2 nu(std::size_t j, std::size_t m);
/// nu_j rotated by +pi/2.
Vec2 nu_perp(std::size_t j, std::size_t m);

/// Polygon with edges {eps_j mu_j}. Throws NoOddFactor when m is a power of
/// two and NotASolution when sum eps_j zeta^j != 0.
ConvexPolygon optimal_polygon_from_sign(const SignVector& eps);

/// nu_j where eps_j = +1 and nu_j_perp where eps_j = -1; same errors.
Frame optimal_frame_from_sign(const SignVector& eps);

/// Edge polygon of a tight irreducible frame. Throws NotTight / NotIrreducible.
ConvexPolygon frame_to_polygon(const Frame& frame);

/// Rows f^{-1}(e_j) in the half-plane T, in the polygon's edge order.
Frame polygon_to_frame(const ConvexPolygon& polygon);

/// The optimal 4-vector frame: (-1, 0), (cos 2pi/3, sin 2pi/3) and the two
/// rows of length sqrt(2 sin(pi/12)) at angles 3pi/8 and 7pi/24.
Frame optimal_frame_m4();

/// The optimal quadrilateral, i.e. the edge polygon of optimal_frame_m4().
ConvexPolygon optimal_polygon_m4();

struct OptimalPair {
  SignVector sign;
  ConvexPolygon polygon;
  Frame frame;
  double beta = 0.0;
  double r = 0.0;
};

OptimalPair make_optimal_pair(const SignVector& eps);

/// Row directions reduced modulo pi, ascending. Used to compare frames up to
/// per-row sign.
std::vector<double> angles_mod_pi(const Frame& frame);

/// Max |edge length| / min |edge length| - 1.
double equilateral_defect(const ConvexPolygon& polygon);

}  // namespace optiframe
