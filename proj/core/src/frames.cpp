#include "optiframe/frames.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "optiframe/errors.hpp"

namespace optiframe {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// For x = (cos th, sin th), y = (-sin th, cos th):
//   || |Ax| - t|Ay| ||^2 = alpha + gamma t^2 - 2 s t,
// with alpha = ||Ax||^2, gamma = ||Ay||^2, s = sum |<a,x><a,y>|.
struct Slice {
  double alpha = 0.0;
  double gamma = 0.0;
  double s = 0.0;

  double q2(double t) const {
    return std::max(0.0, (alpha + gamma * t * t - 2.0 * s * t) / (1.0 + t * t));
  }
};

Slice slice_at(std::span<const Vec2> rows, double theta) {
  const Vec2 x = unit_at(theta);
  const Vec2 y{-x.y, x.x};
  Slice sl;
  for (const Vec2& a : rows) {
    const double p = dot(a, x);
    const double q = dot(a, y);
    sl.alpha += p * p;
    sl.gamma += q * q;
    sl.s += std::abs(p * q);
  }
  return sl;
}

struct SliceMin {
  double t = 0.0;
  double q2 = kInf;
};

// Exact minimum over t in [0, 1]. The derivative of q2 vanishes where
// s t^2 + (gamma - alpha) t - s = 0, whose roots multiply to -1, so at most
// one lies in (0, 1].
SliceMin minimize_t(const Slice& sl) {
  SliceMin best{0.0, sl.q2(0.0)};
  auto consider = [&](double t) {
    const double v = sl.q2(t);
    if (v < best.q2) best = {t, v};
  };
  consider(1.0);
  if (sl.s > 0.0) {
    const double d = sl.gamma - sl.alpha;
    const double root = (-d + std::sqrt(d * d + 4.0 * sl.s * sl.s)) / (2.0 * sl.s);
    if (root > 0.0 && root < 1.0) consider(root);
  }
  return best;
}

LowerWitness make_witness(double theta, double t) {
  const Vec2 x = unit_at(theta);
  return {theta, t, x, t * Vec2{-x.y, x.x}};
}

double beta_from_ratio(double r) {
  const double denom = 1.0 - 2.0 * r;
  if (!(denom > 0.0)) return kInf;
  return 1.0 / std::sqrt(denom);
}

}  // namespace

Frame::Frame(std::vector<Vec2> vectors) : vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw InvalidArgument("a frame needs at least one vector");
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (!vectors_[i].is_finite()) {
      throw InvalidArgument("row " + std::to_string(i) + " has a non-finite entry");
    }
  }
}

GramEntries gram(const Frame& frame) {
  GramEntries g;
  for (const Vec2& v : frame.vectors()) {
    g.a += v.x * v.x;
    g.b += v.y * v.y;
    g.c += v.x * v.y;
  }
  return g;
}

TightnessCertificate is_tight(const Frame& frame, double tol) {
  const GramEntries g = gram(frame);
  const double scale = g.trace();
  const bool tight = scale > 0.0 && std::abs(g.a - g.b) <= tol * scale &&
                     std::abs(g.c) <= tol * scale;
  return {tight, g};
}

bool is_irreducible(const Frame& frame, double angle_tol) {
  const auto rows = frame.vectors();
  for (const Vec2& v : rows) {
    if (v.x == 0.0 && v.y == 0.0) return false;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (std::abs(cross(rows[i], rows[j])) <= angle_tol * rows[i].norm() * rows[j].norm()) {
        return false;
      }
    }
  }
  return true;
}

bool has_full_rank(const Frame& frame) {
  const GramEntries g = gram(frame);
  const double tr = g.trace();
  return tr > 0.0 && g.determinant() > 1e-12 * tr * tr;
}

std::vector<double> phaseless_map(const Frame& frame, Vec2 x) {
  std::vector<double> out;
  out.reserve(frame.m());
  for (const Vec2& a : frame.vectors()) out.push_back(std::abs(dot(a, x)));
  return out;
}

double upper_lipschitz(const Frame& frame) {
  const GramEntries g = gram(frame);
  const double half_tr = 0.5 * g.trace();
  const double half_gap = 0.5 * (g.a - g.b);
  return std::sqrt(half_tr + std::hypot(half_gap, g.c));
}

std::vector<Vec2> frame_edges(const Frame& frame) {
  std::vector<Vec2> edges;
  edges.reserve(frame.m());
  for (const Vec2& a : frame.vectors()) edges.push_back(squared_direction_map(a));
  return edges;
}

EdgeSet merge_parallel_edges(std::span<const Vec2> edges, double angle_tol) {
  std::vector<std::pair<double, Vec2>> keyed;
  for (const Vec2& e : edges) {
    if (e.x != 0.0 || e.y != 0.0) keyed.emplace_back(angle_0_2pi(e), e);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });

  std::vector<Vec2> merged;
  double group_angle = 0.0;
  for (const auto& [angle, e] : keyed) {
    if (!merged.empty() && angle - group_angle <= angle_tol) {
      merged.back() += e;
    } else {
      merged.push_back(e);
      group_angle = angle;
    }
  }
  // Directions just below 2pi belong with those just above 0.
  if (merged.size() > 1 && keyed.front().first + 2.0 * kPi - group_angle <= angle_tol) {
    merged.front() += merged.back();
    merged.pop_back();
  }
  return EdgeSet(std::move(merged));
}

std::string_view to_string(ConditionMethod method) {
  switch (method) {
    case ConditionMethod::exact_tight:
      return "exact_tight";
    case ConditionMethod::exact_reduced:
      return "exact_reduced";
    case ConditionMethod::numeric:
      return "numeric";
  }
  return "unknown";
}

double lower_quotient(const Frame& frame, double theta, double t) {
  const Vec2 x = unit_at(theta);
  const Vec2 y = t * Vec2{-x.y, x.x};
  const std::vector<double> px = phaseless_map(frame, x);
  const std::vector<double> py = phaseless_map(frame, y);
  double sq = 0.0;
  for (std::size_t j = 0; j < px.size(); ++j) sq += (px[j] - py[j]) * (px[j] - py[j]);
  return std::sqrt(sq) / std::sqrt(1.0 + t * t);
}

LowerEstimate lower_lipschitz_numeric(const Frame& frame, NumericGrid grid, double refine_tol) {
  if (grid.n_theta < 1 || grid.n_t < 2) {
    throw InvalidArgument("numeric grid needs n_theta >= 1 and n_t >= 2");
  }
  if (!has_full_rank(frame)) return {0.0, make_witness(0.0, 0.0)};

  // L is attained over unit x and y orthogonal to x with ||y|| <= 1. In R^2
  // that means y = t x_perp with t in [-1, 1], and |A(-y)| = |Ay| lets us
  // restrict to t in [0, 1] without loss.
  const auto rows = frame.vectors();
  const std::size_t n_theta = grid.n_theta;
  const double h = kPi / static_cast<double>(n_theta);

  std::vector<double> slice_best(n_theta, kInf);
  std::vector<double> slice_t(n_theta, 0.0);
  for (std::size_t i = 0; i < n_theta; ++i) {
    const Slice sl = slice_at(rows, h * static_cast<double>(i));
    for (std::size_t k = 0; k < grid.n_t; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(grid.n_t - 1);
      const double v = sl.q2(t);
      if (v < slice_best[i]) {
        slice_best[i] = v;
        slice_t[i] = t;
      }
    }
  }

  // Local minima of the coarse profile (period pi), best first.
  std::vector<std::size_t> cells;
  for (std::size_t i = 0; i < n_theta; ++i) {
    const double prev = slice_best[(i + n_theta - 1) % n_theta];
    const double next = slice_best[(i + 1) % n_theta];
    if (slice_best[i] <= prev && slice_best[i] <= next) cells.push_back(i);
  }
  std::sort(cells.begin(), cells.end(), [&](std::size_t l, std::size_t r) {
    return slice_best[l] < slice_best[r] || (slice_best[l] == slice_best[r] && l < r);
  });
  constexpr std::size_t kMaxCells = 8;
  if (cells.size() > kMaxCells) cells.resize(kMaxCells);

  double best_q2 = kInf;
  LowerWitness best_w;
  for (std::size_t i = 0; i < n_theta; ++i) {
    if (slice_best[i] < best_q2) {
      best_q2 = slice_best[i];
      best_w = make_witness(h * static_cast<double>(i), slice_t[i]);
    }
  }

  // Refinement: t is solved exactly per theta; theta is bracketed by golden
  // section on [theta_i - h, theta_i + h].
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (std::size_t cell : cells) {
    const double center = h * static_cast<double>(cell);
    double lo = center - h;
    double hi = center + h;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    SliceMin f1 = minimize_t(slice_at(rows, x1));
    SliceMin f2 = minimize_t(slice_at(rows, x2));
    while (hi - lo > refine_tol) {
      if (f1.q2 <= f2.q2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - inv_phi * (hi - lo);
        f1 = minimize_t(slice_at(rows, x1));
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + inv_phi * (hi - lo);
        f2 = minimize_t(slice_at(rows, x2));
      }
    }
    for (const auto& [theta, fm] : {std::pair{x1, f1}, std::pair{x2, f2}}) {
      if (fm.q2 < best_q2) {
        best_q2 = fm.q2;
        double wrapped = std::fmod(theta, kPi);
        if (wrapped < 0.0) wrapped += kPi;
        best_w = make_witness(wrapped, fm.t);
      }
    }
  }
  return {std::sqrt(best_q2), best_w};
}

ConditionReport condition_number_tight(const Frame& frame) {
  const TightnessCertificate cert = is_tight(frame);
  if (!cert.tight) throw NotTight("A^T A is not a multiple of the identity");

  ConditionReport report;
  report.m = frame.m();
  const double c_const = 0.5 * cert.gram.trace();
  report.upper = std::sqrt(c_const);

  const std::vector<Vec2> edges = frame_edges(frame);
  // A frame within kTightTol gives ||sum e|| = ||(a - b, 2c)|| <= sqrt(5) tol
  // times sum ||e||.
  const double zero_sum_tol = 3.0 * kTightTol;
  double r = 0.5;
  if (is_irreducible(frame)) {
    report.method = ConditionMethod::exact_tight;
    r = ratio_r(polygon_from_edges(EdgeSet(edges), zero_sum_tol));
  } else {
    report.method = ConditionMethod::exact_reduced;
    const EdgeSet merged = merge_parallel_edges(edges);
    // Fewer than three merged directions is the flat two-edge polygon, r = 1/2.
    if (merged.size() >= 3) r = ratio_r(polygon_from_edges(merged, zero_sum_tol));
  }
  report.beta = beta_from_ratio(r);
  report.lower = std::isfinite(report.beta) ? report.upper / report.beta : 0.0;

  // sum |x^T a a^T y| = (1/2) sum |<e_j, u(psi)>| with psi = 2 theta + pi/2.
  const ProjectionMax proj = max_abs_projection_sum(edges);
  report.edge_direction = proj.direction;
  double theta = 0.5 * (proj.direction.angle() - kPi / 2.0);
  if (theta < 0.0) theta += kPi;
  report.witness = make_witness(theta, 1.0);
  return report;
}

ConditionReport condition_number(const Frame& frame) {
  if (is_tight(frame).tight) return condition_number_tight(frame);

  ConditionReport report;
  report.m = frame.m();
  report.method = ConditionMethod::numeric;
  report.upper = upper_lipschitz(frame);
  const LowerEstimate low = lower_lipschitz_numeric(frame);
  report.lower = low.value;
  report.witness = low.witness;
  report.beta = low.value > 0.0 ? report.upper / low.value : kInf;
  return report;
}

double beta_harmonic(std::size_t m) {
  if (m < 3) throw InvalidArgument("harmonic frame needs m >= 3");
  const double md = static_cast<double>(m);
  if (m % 2 == 0) return 1.0 / std::sqrt(1.0 - 2.0 / (md * std::sin(kPi / md)));
  return 1.0 / std::sqrt(1.0 - 1.0 / (md * std::sin(kPi / (2.0 * md))));
}

BetaBound beta_min_bound(std::size_t m) {
  if (m < 3) throw InvalidArgument("beta_min_bound needs m >= 3");
  const double md = static_cast<double>(m);
  const bool power_of_two = (m & (m - 1)) == 0;
  return {1.0 / std::sqrt(1.0 - 1.0 / (md * std::sin(kPi / (2.0 * md)))), !power_of_two};
}

UniversalBounds universal_lower_bounds() {
  return {std::sqrt(kPi / (kPi - 2.0)), std::sqrt(4.0 / (4.0 - kPi))};
}

double lower_lipschitz_squared_cap(const Frame& frame) {
  const double md = static_cast<double>(frame.m());
  double total = 0.0;
  for (const Vec2& a : frame.vectors()) total += dot(a, a);
  return 0.5 * total - total / (2.0 * md * std::sin(kPi / (2.0 * md)));
}

}  // namespace optiframe
