#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "optiframe/constructions.hpp"
#include "optiframe/enumeration.hpp"
#include "optiframe/errors.hpp"
#include "optiframe/frames.hpp"
#include "optiframe/oracle.hpp"
#include "optiframe/sampling.hpp"

using namespace optiframe;

namespace {

constexpr double kPi = std::numbers::pi;

// 50-digit values from tests/oracles/frozen_values.py.
constexpr double kRealFloor = 1.6588967399703058857;
constexpr double kComplexFloor = 2.1586552217353950789;
constexpr double kBound4 = 1.6982885495499847228;
constexpr double kBound5 = 1.6836200145546486454;
constexpr double kBound6 = 1.6758874198019132802;
constexpr double kBound12 = 1.6630706178815419743;
constexpr double kHarmonic4 = 1.8477590650225735123;
constexpr double kHarmonic6 = 1.7320508075688772935;
constexpr double kHarmonic12 = 1.6758874198019132802;
constexpr double kE4Prime = 1.7122650649295326242;

Frame duplicated(const Frame& f) {
  std::vector<Vec2> rows;
  for (const Vec2& v : f.vectors()) {
    rows.push_back(v);
    rows.push_back(-v);
  }
  return Frame(std::move(rows));
}

}  // namespace

TEST(Frame, Validation) {
  EXPECT_THROW(Frame(std::vector<Vec2>{}), InvalidArgument);
  EXPECT_THROW(Frame({{1, 0}, {std::nan(""), 0}}), InvalidArgument);
  EXPECT_THROW(Frame({{1, 0}, {std::numeric_limits<double>::infinity(), 0}}), InvalidArgument);
}

TEST(Tightness, Basics) {
  EXPECT_TRUE(is_tight(harmonic_frame(5)).tight);
  EXPECT_TRUE(is_tight(Frame({{1, 0}, {0, 1}})).tight);
  EXPECT_FALSE(is_tight(Frame({{1, 0}, {0, 2}})).tight);
  EXPECT_FALSE(is_tight(Frame({{0, 0}, {0, 0}, {0, 0}})).tight);
  const GramEntries g = is_tight(Frame({{1, 1}, {1, -1}})).gram;
  EXPECT_DOUBLE_EQ(g.a, 2.0);
  EXPECT_DOUBLE_EQ(g.b, 2.0);
  EXPECT_DOUBLE_EQ(g.c, 0.0);
}

TEST(Tightness, EquivalentToZeroEdgeSum) {
  sampling::Rng rng(10);
  for (int i = 0; i < 100; ++i) {
    const Frame g = sampling::random_gaussian_frame(rng, 2 + i % 10);
    EXPECT_EQ(is_tight(g).tight, EdgeSet(frame_edges(g)).zero_sum());
    const Frame t = sampling::random_tight_frame(rng, 3 + i % 10);
    EXPECT_TRUE(is_tight(t).tight);
    EXPECT_TRUE(EdgeSet(frame_edges(t)).zero_sum());
  }
}

TEST(Irreducible, Cases) {
  EXPECT_TRUE(is_irreducible(harmonic_frame(4)));
  EXPECT_FALSE(is_irreducible(Frame({{1, 0}, {0, 1}, {-2, 0}})));
  EXPECT_FALSE(is_irreducible(Frame({{1, 0}, {0, 1}, {0, 0}})));
  EXPECT_FALSE(has_full_rank(Frame({{1, 1}, {2, 2}, {-1, -1}})));
  EXPECT_TRUE(has_full_rank(Frame({{1, 0}, {0, 1}})));
}

TEST(MergeParallelEdges, DropsZerosAndSums) {
  const EdgeSet merged =
      merge_parallel_edges(std::vector<Vec2>{{1, 0}, {0, 0}, {2, 0}, {0, 1}, {-1, 0}});
  ASSERT_EQ(merged.size(), 3u);
  double along_x = 0.0;
  for (const Vec2& e : merged.edges()) along_x = std::max(along_x, e.x);
  EXPECT_DOUBLE_EQ(along_x, 3.0);
  // Directions just either side of angle 0 are the same direction.
  const EdgeSet wrap = merge_parallel_edges(std::vector<Vec2>{{1, 1e-12}, {1, -1e-12}, {0, 1}});
  EXPECT_EQ(wrap.size(), 2u);
}

TEST(ClosedForms, FrozenValues) {
  const UniversalBounds u = universal_lower_bounds();
  EXPECT_NEAR(u.real_bound, kRealFloor, 1e-14);
  EXPECT_NEAR(u.complex_bound, kComplexFloor, 1e-14);

  EXPECT_NEAR(beta_min_bound(4).value, kBound4, 1e-14);
  EXPECT_FALSE(beta_min_bound(4).attained);
  EXPECT_NEAR(beta_min_bound(5).value, kBound5, 1e-14);
  EXPECT_NEAR(beta_min_bound(6).value, kBound6, 1e-14);
  EXPECT_TRUE(beta_min_bound(6).attained);
  EXPECT_NEAR(beta_min_bound(12).value, kBound12, 1e-14);
  EXPECT_NEAR(beta_min_bound(3).value, std::sqrt(3.0), 1e-14);

  EXPECT_NEAR(beta_harmonic(4), kHarmonic4, 1e-14);
  EXPECT_NEAR(beta_harmonic(6), kHarmonic6, 1e-14);
  EXPECT_NEAR(beta_harmonic(12), kHarmonic12, 1e-14);
  EXPECT_NEAR(beta_harmonic(5), kBound5, 1e-14);
}

TEST(ClosedForms, BoundDecreasesTowardFloor) {
  for (std::size_t m = 3; m < 200; ++m) {
    EXPECT_GT(beta_min_bound(m).value, beta_min_bound(m + 1).value);
    EXPECT_GT(beta_min_bound(m).value, kRealFloor);
  }
  EXPECT_NEAR(beta_min_bound(100000).value, kRealFloor, 1e-9);
}

TEST(ConditionNumber, HarmonicExact) {
  for (std::size_t m = 3; m <= 20; ++m) {
    const ConditionReport r = condition_number(harmonic_frame(m));
    EXPECT_EQ(r.method, ConditionMethod::exact_tight);
    EXPECT_NEAR(r.beta, beta_harmonic(m), 1e-12) << m;
    EXPECT_NEAR(r.upper, std::sqrt(m / 2.0), 1e-12);
  }
}

TEST(ConditionNumber, E4Prime) {
  const ConditionReport r = condition_number(optimal_frame_m4());
  EXPECT_EQ(r.method, ConditionMethod::exact_tight);
  EXPECT_NEAR(r.beta, kE4Prime, 1e-12);
  EXPECT_LT(r.beta, kHarmonic4);
  EXPECT_GT(r.beta, kBound4);
}

TEST(ConditionNumber, WitnessAttainsLower) {
  sampling::Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    const Frame f = sampling::random_tight_frame(rng, 3 + i % 12);
    const ConditionReport r = condition_number_tight(f);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_NEAR(lower_quotient(f, r.witness->theta, r.witness->t), r.lower, 1e-12);
    EXPECT_NEAR(r.witness->x.norm(), 1.0, 1e-15);
    EXPECT_NEAR(dot(r.witness->x, r.witness->y), 0.0, 1e-15);
  }
}

TEST(ConditionNumber, BetaFromEdgePolygon) {
  sampling::Rng rng(12);
  for (int i = 0; i < 40; ++i) {
    const Frame f = sampling::random_tight_frame(rng, 3 + i % 12);
    const double r = ratio_r(frame_to_polygon(f));
    EXPECT_NEAR(condition_number_tight(f).beta, 1.0 / std::sqrt(1.0 - 2.0 * r), 1e-12);
  }
}

TEST(ConditionNumber, NotTightThrows) {
  EXPECT_THROW(condition_number_tight(Frame({{1, 0}, {0, 2}, {1, 1}})), NotTight);
}

TEST(ConditionNumber, ReducibleFrames) {
  // Each row repeated up to sign: the merged polygon is the same triangle.
  const ConditionReport twice = condition_number(duplicated(harmonic_frame(3)));
  EXPECT_EQ(twice.method, ConditionMethod::exact_reduced);
  EXPECT_NEAR(twice.beta, std::sqrt(3.0), 1e-12);
  const LowerEstimate numeric = lower_lipschitz_numeric(duplicated(harmonic_frame(3)));
  EXPECT_NEAR(numeric.value, twice.lower, 1e-6 * twice.lower);

  // A zero row changes nothing.
  std::vector<Vec2> rows(harmonic_frame(5).vectors().begin(), harmonic_frame(5).vectors().end());
  rows.push_back({0, 0});
  EXPECT_NEAR(condition_number(Frame(rows)).beta, beta_harmonic(5), 1e-12);

  // Two directions only: not phase retrievable.
  const ConditionReport flat = condition_number(Frame({{1, 0}, {1, 0}, {0, 1}, {0, 1}}));
  EXPECT_EQ(flat.method, ConditionMethod::exact_reduced);
  EXPECT_TRUE(std::isinf(flat.beta));
  EXPECT_EQ(flat.lower, 0.0);
}

TEST(ConditionNumber, NumericRouteForGeneralMatrices) {
  const Frame f({{1, 0}, {0, 2}, {1, 1}});
  const ConditionReport r = condition_number(f);
  EXPECT_EQ(r.method, ConditionMethod::numeric);
  const oracle::SampledLipschitz s = oracle::sampled_lipschitz(f, 2048, 257);
  EXPECT_LE(r.lower, s.lower + 1e-12);
  EXPECT_NEAR(r.lower, s.lower, 1e-4);
  EXPECT_GE(r.upper + 1e-12, s.upper);
  EXPECT_NEAR(lower_quotient(f, r.witness->theta, r.witness->t), r.lower, 1e-12);
}

TEST(ConditionNumber, RankDeficient) {
  const ConditionReport r = condition_number(Frame({{1, 1}, {2, 2}, {-1, -1}}));
  EXPECT_EQ(r.lower, 0.0);
  EXPECT_TRUE(std::isinf(r.beta));
}

TEST(NumericLower, MatchesExactOnTightFrames) {
  sampling::Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    const Frame f = sampling::random_tight_frame(rng, 3 + i % 8);
    EXPECT_NEAR(lower_lipschitz_numeric(f).value, condition_number_tight(f).lower, 1e-9);
  }
}

TEST(NumericLower, RejectsEmptyGrid) {
  EXPECT_THROW(lower_lipschitz_numeric(harmonic_frame(3), NumericGrid{0, 8}), InvalidArgument);
}

TEST(LowerLipschitzCap, HoldsAndIsSharpForOptimalFrames) {
  sampling::Rng rng(14);
  for (int i = 0; i < 50; ++i) {
    const Frame f = sampling::random_gaussian_frame(rng, 3 + i % 10);
    const double l = lower_lipschitz_numeric(f).value;
    EXPECT_LE(l * l, lower_lipschitz_squared_cap(f) + 1e-9);
  }
  for (std::size_t m : {3, 5, 6, 9, 12, 15}) {
    for (const SignClass& c : enumerate_solution_classes(m)) {
      const Frame f = optimal_frame_from_sign(c.canonical);
      const double l = condition_number_tight(f).lower;
      EXPECT_NEAR(l * l, lower_lipschitz_squared_cap(f), 1e-12) << m;
    }
  }
}

TEST(ConditionNumber, InvariantUnderRotationAndRowSigns) {
  const Frame base = optimal_frame_m4();
  const double c = std::cos(0.7);
  const double s = std::sin(0.7);
  std::vector<Vec2> rows;
  int k = 0;
  for (const Vec2& v : base.vectors()) {
    Vec2 r{c * v.x - s * v.y, s * v.x + c * v.y};
    rows.push_back(k++ % 2 ? -r : r);
  }
  EXPECT_NEAR(condition_number(Frame(rows)).beta, kE4Prime, 1e-12);
}
