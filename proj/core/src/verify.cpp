#include "optiframe/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <set>
#include <sstream>

#include "optiframe/constructions.hpp"
#include "optiframe/cyclotomic.hpp"
#include "optiframe/enumeration.hpp"
#include "optiframe/errors.hpp"
#include "optiframe/frames.hpp"
#include "optiframe/geometry.hpp"
#include "optiframe/oracle.hpp"
#include "optiframe/sampling.hpp"

namespace optiframe::verify {
namespace {

constexpr double kPi = std::numbers::pi;

class BetaLog {
 public:
  void record(double beta) {
    if (!std::isfinite(beta)) return;
    std::lock_guard lock(mutex_);
    values_.push_back(beta);
  }
  std::vector<double> snapshot() {
    std::lock_guard lock(mutex_);
    return values_;
  }

 private:
  std::mutex mutex_;
  std::vector<double> values_;
};

BetaLog& beta_log() {
  static BetaLog log;
  return log;
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

Outcome suite_table1() {
  // Counts of frame classes for 3 <= m <= 15.
  const std::map<std::size_t, std::size_t> expected{{3, 1},  {5, 1},  {6, 1},  {7, 1},
                                                    {9, 2},  {10, 1}, {11, 1}, {12, 2},
                                                    {13, 1}, {14, 1}, {15, 5}};
  Outcome out;
  std::ostringstream summary;
  for (std::size_t m = 3; m <= 15; ++m) {
    const ClassCount cc = class_count(m);
    summary << m << ':' << cc.count << ' ';
    if (m == 4 || m == 8) {
      if (cc.count != 0 || !cc.power_of_two || cc.literature_count != 1u) {
        out.fail(fmt("m=%zu: expected 0 enumerated classes with literature count 1", m));
      }
      continue;
    }
    if (cc.count != expected.at(m)) {
      out.fail(fmt("m=%zu: %zu classes, expected %zu", m, cc.count, expected.at(m)));
    }
  }
  if (out.passed) out.detail = summary.str();
  return out;
}

Outcome suite_mincond() {
  Outcome out;
  double worst_beta = 0.0;
  double worst_r = 0.0;
  std::size_t pairs = 0;
  for (std::size_t m : {3, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15}) {
    const double bound = beta_min_bound(m).value;
    const double r_star = 1.0 / (2.0 * static_cast<double>(m) * std::sin(kPi / (2.0 * m)));
    for (const SignClass& cls : enumerate_solution_classes(m)) {
      const OptimalPair pair = make_optimal_pair(cls.canonical);
      beta_log().record(pair.beta);
      ++pairs;
      worst_beta = std::max(worst_beta, std::abs(pair.beta - bound));
      worst_r = std::max(worst_r, std::abs(pair.r - r_star));
      if (std::abs(pair.beta - bound) > 1e-10) {
        out.fail(fmt("m=%zu: beta %.12f vs bound %.12f", m, pair.beta, bound));
      }
      if (std::abs(pair.r - r_star) > 1e-12) {
        out.fail(fmt("m=%zu: r %.15f vs %.15f", m, pair.r, r_star));
      }
      if (equilateral_defect(pair.polygon) > 1e-12) out.fail(fmt("m=%zu: not equilateral", m));
    }
  }
  if (out.passed) {
    out.detail = fmt("%zu optimal pairs; max |beta-bound| = %.2e, max |r-r*| = %.2e", pairs,
                     worst_beta, worst_r);
  }
  return out;
}

Outcome suite_m4() {
  Outcome out;
  const double beta_e4 = condition_number(harmonic_frame(4)).beta;
  const double beta_e4p = condition_number(optimal_frame_m4()).beta;
  beta_log().record(beta_e4);
  beta_log().record(beta_e4p);
  const double want_e4 = std::sqrt(2.0 + std::sqrt(2.0));
  const double want_e4p = std::sqrt(1.0 + std::sqrt(2.0) / 2.0 + std::sqrt(6.0) / 2.0);
  const double r = ratio_r(frame_to_polygon(optimal_frame_m4()));
  const double want_r = 1.0 / (2.0 + std::sqrt(6.0) - std::sqrt(2.0));
  if (std::abs(beta_e4 - want_e4) > 1e-12) out.fail(fmt("beta(E_4) = %.15f", beta_e4));
  if (std::abs(beta_e4p - want_e4p) > 1e-12) out.fail(fmt("beta(E_4') = %.15f", beta_e4p));
  if (!(beta_e4p < beta_e4)) out.fail("beta(E_4') is not below beta(E_4)");
  if (std::abs(r - want_r) > 1e-12) out.fail(fmt("r(E_4' polygon) = %.15f", r));
  if (out.passed) {
    out.detail = fmt("beta(E_4)=%.7f > beta(E_4')=%.7f, r=%.7f", beta_e4, beta_e4p, r);
  }
  return out;
}

Outcome suite_harmonic() {
  Outcome out;
  double worst = 0.0;
  for (std::size_t m = 3; m <= 12; ++m) {
    const double closed = beta_harmonic(m);
    const double computed = condition_number(harmonic_frame(m)).beta;
    beta_log().record(computed);
    worst = std::max(worst, std::abs(closed - computed));
    if (std::abs(closed - computed) > 1e-9) {
      out.fail(fmt("m=%zu: closed form %.12f vs computed %.12f", m, closed, computed));
    }
    if (m % 2 == 0 && has_odd_factor(m) && !(closed > beta_min_bound(m).value + 1e-6)) {
      out.fail(fmt("m=%zu: harmonic frame reaches the minimum", m));
    }
  }
  if (out.passed) out.detail = fmt("m=3..12, max deviation %.2e", worst);
  return out;
}

Outcome suite_diameter() {
  Outcome out;
  sampling::Rng rng(20240501);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t m = sampling::uniform_size(rng, 3, 40);
    const ConvexPolygon p = polygon_from_edges(sampling::random_convex_edges(rng, m));
    const double gap = std::abs(diameter(p) - max_abs_projection_sum(p.edges()).value / 2.0);
    worst = std::max(worst, gap / perimeter(p));
    if (gap > 1e-9 * perimeter(p)) out.fail(fmt("polygon %d (m=%zu): gap %.3e", i, m, gap));
  }
  if (out.passed) out.detail = fmt("500 polygons, max gap/perimeter %.2e", worst);
  return out;
}

Outcome suite_tightness() {
  Outcome out;
  sampling::Rng rng(7);
  std::size_t mismatches = 0;
  std::size_t tight_random = 0;
  std::size_t loose_constructed = 0;
  auto agree = [&](const Frame& f) {
    const bool tight = is_tight(f).tight;
    const bool zero_sum = EdgeSet(frame_edges(f)).zero_sum();
    if (tight != zero_sum) ++mismatches;
    return tight;
  };
  for (int i = 0; i < 200; ++i) {
    if (agree(sampling::random_gaussian_frame(rng, sampling::uniform_size(rng, 2, 12)))) {
      ++tight_random;
    }
  }
  for (int i = 0; i < 200; ++i) {
    if (!agree(sampling::random_tight_frame(rng, sampling::uniform_size(rng, 3, 12)))) {
      ++loose_constructed;
    }
  }
  if (mismatches != 0) out.fail(fmt("%zu frames where tightness and zero edge-sum disagree", mismatches));
  if (tight_random != 0) out.fail(fmt("%zu random frames reported tight", tight_random));
  if (loose_constructed != 0) out.fail(fmt("%zu constructed tight frames rejected", loose_constructed));
  if (out.passed) out.detail = "400 frames, 0 false positives, 0 false negatives";
  return out;
}

Outcome suite_solutions() {
  Outcome out;
  std::size_t total = 0;
  for (std::size_t m = 3; m <= 12; ++m) {
    const std::vector<SignVector> exact = enumerate_solutions(m);
    const std::vector<SignVector> floating = oracle::brute_force_solutions(m);
    if (exact != floating) out.fail(fmt("m=%zu: enumerated set differs from float set", m));
    // Vector-by-vector through the direct polynomial-division route as well.
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << m); ++idx) {
      const SignVector eps = SignVector::from_index(idx, m);
      if (sign_sum_is_zero(eps) != (sign_sum_numeric(eps) < 1e-9)) {
        out.fail(fmt("m=%zu index %llu: exact and float tests disagree", m,
                     static_cast<unsigned long long>(idx)));
      }
    }
    total += exact.size();
  }
  if (out.passed) out.detail = fmt("m=3..12 agree, %zu solutions in total", total);
  return out;
}

Outcome suite_lipschitz() {
  Outcome out;
  sampling::Rng rng(99);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t m = sampling::uniform_size(rng, 3, 10);
    const Frame f = sampling::random_tight_frame(rng, m);
    if (!is_irreducible(f)) {
      out.fail(fmt("frame %d is reducible", i));
      continue;
    }
    const ConditionReport exact = condition_number_tight(f);
    beta_log().record(exact.beta);
    const double numeric = lower_lipschitz_numeric(f).value;
    const double rel = std::abs(numeric - exact.lower) / exact.lower;
    worst = std::max(worst, rel);
    if (rel > 1e-4) out.fail(fmt("frame %d: numeric L %.10f vs exact %.10f", i, numeric, exact.lower));

    const oracle::SampledLipschitz s = oracle::sampled_lipschitz(f, 1024, 65);
    if (s.upper > exact.upper + 1e-12) {
      out.fail(fmt("frame %d: sampled U %.12f exceeds U %.12f", i, s.upper, exact.upper));
    }
    if (s.lower < exact.lower - 1e-12) {
      out.fail(fmt("frame %d: sampled L %.12f below exact L %.12f", i, s.lower, exact.lower));
    }
  }
  if (out.passed) out.detail = fmt("100 tight frames, max relative L error %.2e", worst);
  return out;
}

Outcome suite_lowerbound() {
  Outcome out;
  sampling::Rng rng(31337);
  double worst = -1e300;
  for (int i = 0; i < 200; ++i) {
    const std::size_t m = sampling::uniform_size(rng, 3, 12);
    const Frame f = sampling::random_gaussian_frame(rng, m);
    const double l = lower_lipschitz_numeric(f).value;
    if (l > 0.0) beta_log().record(upper_lipschitz(f) / l);
    const double excess = l * l - lower_lipschitz_squared_cap(f);
    worst = std::max(worst, excess);
    if (excess > 1e-9) out.fail(fmt("matrix %d (m=%zu): L^2 exceeds the cap by %.3e", i, m, excess));
  }
  if (out.passed) out.detail = fmt("200 matrices, max L^2 - cap = %.3e", worst);
  return out;
}

Outcome suite_discrepancy() {
  Outcome out;
  sampling::Rng rng(2718);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t m = sampling::uniform_size(rng, 1, 12);
    const std::vector<Vec2> edges = sampling::random_unit_vectors(rng, m);
    const double disc = oracle::discrepancy_max(edges).value;
    const double proj = max_abs_projection_sum(edges).value;
    worst = std::max(worst, std::abs(disc - proj));
    if (std::abs(disc - proj) > 1e-10) out.fail(fmt("set %d (m=%zu): %.12f vs %.12f", i, m, disc, proj));
  }
  if (out.passed) out.detail = fmt("100 unit edge sets, max deviation %.2e", worst);
  return out;
}

Outcome suite_floor() {
  // Own sample so the suite is meaningful when run alone.
  for (std::size_t m = 3; m <= 15; ++m) beta_log().record(condition_number(harmonic_frame(m)).beta);
  beta_log().record(condition_number(optimal_frame_m4()).beta);
  sampling::Rng rng(4242);
  for (int i = 0; i < 20; ++i) {
    beta_log().record(condition_number_tight(sampling::random_tight_frame(rng, 3 + i % 8)).beta);
  }

  constexpr double kFloor = 1.6586576;
  Outcome out;
  const std::vector<double> betas = beta_log().snapshot();
  const double lowest = *std::min_element(betas.begin(), betas.end());
  if (lowest < kFloor - 1e-9) out.fail(fmt("beta %.10f is below the universal floor", lowest));
  if (out.passed) out.detail = fmt("%zu finite betas, smallest %.7f", betas.size(), lowest);
  return out;
}

using SuiteFn = Outcome (*)();

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"table1", suite_table1},         {"mincond", suite_mincond},
      {"m4", suite_m4},                 {"harmonic", suite_harmonic},
      {"diameter", suite_diameter},     {"tightness", suite_tightness},
      {"solutions", suite_solutions},   {"lipschitz", suite_lipschitz},
      {"lowerbound", suite_lowerbound}, {"discrepancy", suite_discrepancy},
      {"floor", suite_floor},
  };
  return suites;
}

// Wall-clock budgets, in seconds.
double budget_for(std::string_view name) {
  if (name == "table1") return 10.0;
  if (name == "diameter") return 5.0;
  if (name == "lipschitz") return 60.0;
  return 0.0;
}

CheckResult run_one(const std::string& name, SuiteFn fn) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome = fn();
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (const double budget = budget_for(name); budget > 0.0 && seconds > budget) {
    outcome.fail(fmt("took %.2f s, budget %.0f s", seconds, budget));
  }
  return {name, outcome.passed, outcome.detail, seconds};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_suite(std::string_view name) {
  std::vector<CheckResult> results;
  for (const auto& [suite, fn] : registry()) {
    if (name == "all" || name == suite) results.push_back(run_one(suite, fn));
  }
  if (results.empty()) throw InvalidArgument("unknown suite '" + std::string(name) + "'");
  return results;
}

std::vector<double> recorded_betas() { return beta_log().snapshot(); }

}  // namespace optiframe::verify
