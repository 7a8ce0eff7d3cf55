#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "optiframe/constructions.hpp"
#include "optiframe/enumeration.hpp"
#include "optiframe/errors.hpp"
#include "optiframe/sampling.hpp"

using namespace optiframe;

namespace {

constexpr double kPi = std::numbers::pi;

double mod_pi_distance(double a, double b) {
  const double d = std::fmod(std::abs(a - b), kPi);
  return std::min(d, kPi - d);
}

}  // namespace

TEST(NamedVectors, Definitions) {
  EXPECT_NEAR(mu(1, 3).x, 0.5, 1e-15);
  EXPECT_NEAR(mu(3, 3).x, -1.0, 1e-15);
  EXPECT_NEAR(nu(3, 3).y, 1.0, 1e-15);
  EXPECT_NEAR(nu_perp(1, 3).x, -0.5, 1e-15);
  EXPECT_THROW(mu(0, 3), InvalidArgument);
  EXPECT_THROW(nu(4, 3), InvalidArgument);
}

TEST(HarmonicFrame, Rows) {
  const Frame f = harmonic_frame(4);
  ASSERT_EQ(f.m(), 4u);
  EXPECT_NEAR(f[1].x, std::cos(kPi / 4.0), 1e-15);
  EXPECT_NEAR(f[2].x, 0.0, 1e-15);
}

TEST(OptimalFrame, ThreeVectors) {
  // The single class for m = 3: unit vectors at 30, 90 and 150 degrees.
  const Frame f = optimal_frame_from_sign(enumerate_solution_classes(3).front().canonical);
  std::vector<double> degrees;
  for (double a : angles_mod_pi(f)) degrees.push_back(a * 180.0 / kPi);
  ASSERT_EQ(degrees.size(), 3u);
  EXPECT_NEAR(degrees[0], 30.0, 1e-12);
  EXPECT_NEAR(degrees[1], 90.0, 1e-12);
  EXPECT_NEAR(degrees[2], 150.0, 1e-12);
}

TEST(OptimalFrame, Errors) {
  EXPECT_THROW(optimal_frame_from_sign(SignVector({1, 1, 1, 1})), NoOddFactor);
  EXPECT_THROW(optimal_polygon_from_sign(SignVector({1, -1, 1, 1, 1, -1, -1, 1})), NoOddFactor);
  EXPECT_THROW(optimal_frame_from_sign(SignVector({1, 1, 1})), NotASolution);
  EXPECT_THROW(optimal_polygon_from_sign(SignVector({1, 1, 1, 1, 1})), NotASolution);
}

TEST(OptimalPair, EquilateralAndDual) {
  for (std::size_t m : {3, 5, 6, 7, 9, 15}) {
    for (const SignClass& c : enumerate_solution_classes(m)) {
      const OptimalPair p = make_optimal_pair(c.canonical);
      EXPECT_LT(equilateral_defect(p.polygon), 1e-12);
      for (const Vec2& v : p.frame.vectors()) EXPECT_NEAR(v.norm(), 1.0, 1e-15);
      // The frame's edge polygon is the constructed polygon up to translation.
      const ConvexPolygon dual = frame_to_polygon(p.frame);
      EXPECT_NEAR(perimeter(dual), perimeter(p.polygon), 1e-12);
      EXPECT_NEAR(diameter(dual), diameter(p.polygon), 1e-12);
    }
  }
}

TEST(OptimalFrame, ShiftRotatesDirections) {
  // S(eps) gives the same frame turned by -pi/2m, modulo pi.
  for (std::size_t m : {5, 9, 12, 15}) {
    for (const SignClass& c : enumerate_solution_classes(m)) {
      const std::vector<double> a = angles_mod_pi(optimal_frame_from_sign(c.canonical));
      const std::vector<double> b = angles_mod_pi(optimal_frame_from_sign(shift(c.canonical)));
      for (double x : a) {
        const double target = x - kPi / (2.0 * m);
        double best = kPi;
        for (double y : b) best = std::min(best, mod_pi_distance(target, y));
        EXPECT_LT(best, 1e-12) << m;
      }
    }
  }
}

TEST(FrameToPolygon, RoundTrip) {
  sampling::Rng rng(20);
  for (int i = 0; i < 50; ++i) {
    const Frame f = sampling::random_tight_frame(rng, 3 + i % 15);
    const ConvexPolygon p = frame_to_polygon(f);
    const Frame back = polygon_to_frame(p);
    const ConvexPolygon again = frame_to_polygon(back);
    ASSERT_EQ(again.m(), p.m());
    for (std::size_t j = 0; j < p.m(); ++j) {
      EXPECT_NEAR(again.vertices()[j].x, p.vertices()[j].x, 1e-12);
      EXPECT_NEAR(again.vertices()[j].y, p.vertices()[j].y, 1e-12);
    }
    // Rows agree with the original up to sign.
    const std::vector<double> a = angles_mod_pi(f);
    const std::vector<double> b = angles_mod_pi(back);
    ASSERT_EQ(a.size(), b.size());
    for (double x : a) {
      double best = kPi;
      for (double y : b) best = std::min(best, mod_pi_distance(x, y));
      EXPECT_LT(best, 1e-12);
    }
  }
}

TEST(FrameToPolygon, Errors) {
  EXPECT_THROW(frame_to_polygon(Frame({{1, 0}, {0, 2}, {1, 1}})), NotTight);
  EXPECT_THROW(frame_to_polygon(Frame({{1, 0}, {0, 1}, {-1, 0}, {0, 1}})), NotIrreducible);
}

TEST(OptimalM4, Construction) {
  const Frame f = optimal_frame_m4();
  ASSERT_EQ(f.m(), 4u);
  const double s = std::sqrt(2.0 * std::sin(kPi / 12.0));
  EXPECT_NEAR(f[2].norm(), s, 1e-15);
  EXPECT_NEAR(f[3].norm(), s, 1e-15);
  EXPECT_NEAR(f[2].angle(), 3.0 * kPi / 8.0, 1e-15);
  EXPECT_NEAR(f[3].angle(), 7.0 * kPi / 24.0, 1e-15);
  EXPECT_TRUE(is_tight(f).tight);
  EXPECT_TRUE(is_irreducible(f));

  const ConvexPolygon q = optimal_polygon_m4();
  EXPECT_EQ(q.m(), 4u);
  EXPECT_NEAR(ratio_r(q), 0.32945931129894556118, 1e-14);
  EXPECT_NEAR(ratio_r(q), 1.0 / (2.0 + std::sqrt(6.0) - std::sqrt(2.0)), 1e-14);
}
