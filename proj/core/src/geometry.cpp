#include "optiframe/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "optiframe/errors.hpp"

namespace optiframe {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sum_abs_projection(std::span<const Vec2> edges, Vec2 u) {
  double h = 0.0;
  for (const Vec2& e : edges) h += std::abs(dot(e, u));
  return h;
}

double reduce_mod_pi(double a) {
  double r = std::fmod(a, kPi);
  if (r < 0.0) r += kPi;
  if (r >= kPi) r -= kPi;
  return r;
}

}  // namespace

double angle_0_2pi(Vec2 v) {
  double a = v.angle();
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

PolarVector PolarVector::make(double t, double phi) {
  if (!std::isfinite(t) || !std::isfinite(phi) || t < 0.0) {
    throw InvalidPolarVector("magnitude must be finite and non-negative");
  }
  if (!(phi > 0.0 && phi <= kPi)) {
    throw InvalidPolarVector("angle " + std::to_string(phi) +
                             " outside (0, pi]");
  }
  if (t == 0.0) return PolarVector{0.0, kPi};
  return PolarVector{t, phi};
}

Vec2 normalize_to_half_plane(Vec2 v) {
  if (v.y < 0.0 || (v.y == 0.0 && v.x > 0.0)) return -v;
  return v;
}

PolarVector to_polar(Vec2 v) {
  const double t = v.norm();
  if (t == 0.0) return PolarVector{0.0, kPi};
  double phi = v.angle();
  // Rounding can land the angle a hair below zero for vectors on the
  // negative x-axis; T contains that ray at phi = pi.
  if (phi <= 0.0) phi += kPi;
  return PolarVector::make(t, phi);
}

Vec2 half_to_edge(const PolarVector& a) {
  const PolarVector checked = PolarVector::make(a.t, a.phi);
  if (checked.t == 0.0) return {0.0, 0.0};
  const double t2 = checked.t * checked.t;
  return {t2 * std::cos(2.0 * checked.phi), t2 * std::sin(2.0 * checked.phi)};
}

PolarVector edge_to_half(Vec2 e) {
  const double t0 = e.norm();
  if (t0 == 0.0) return PolarVector{0.0, kPi};
  // 2 phi in (0, 2pi]; the positive x-axis maps to 2 phi = 2 pi.
  double two_phi = e.angle();
  if (two_phi <= 0.0) two_phi += kTwoPi;
  return PolarVector{std::sqrt(t0), two_phi / 2.0};
}

Vec2 EdgeSet::sum() const {
  Vec2 s;
  for (const Vec2& e : edges_) s += e;
  return s;
}

double EdgeSet::total_length() const {
  double total = 0.0;
  for (const Vec2& e : edges_) total += e.norm();
  return total;
}

bool EdgeSet::zero_sum(double rel_tol) const {
  return sum().norm() <= rel_tol * total_length();
}

bool EdgeSet::all_nonzero() const {
  return std::none_of(edges_.begin(), edges_.end(),
                      [](const Vec2& e) { return e.x == 0.0 && e.y == 0.0; });
}

bool EdgeSet::pairwise_distinct_directions(double angle_tol) const {
  std::vector<double> angles;
  angles.reserve(edges_.size());
  for (const Vec2& e : edges_) {
    if (e.x != 0.0 || e.y != 0.0) angles.push_back(angle_0_2pi(e));
  }
  if (angles.size() < 2) return true;
  std::sort(angles.begin(), angles.end());
  for (std::size_t i = 1; i < angles.size(); ++i) {
    if (angles[i] - angles[i - 1] <= angle_tol) return false;
  }
  return angles.front() + kTwoPi - angles.back() > angle_tol;
}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<Vec2> vertices) {
  const std::size_t m = vertices.size();
  if (m < 3) throw NotStrictlyConvex("need at least 3 vertices");
  std::vector<Vec2> edges(m);
  for (std::size_t j = 0; j < m; ++j) {
    if (!vertices[j].is_finite()) throw NotStrictlyConvex("non-finite vertex");
    edges[j] = vertices[(j + 1) % m] - vertices[j];
    if (edges[j].x == 0.0 && edges[j].y == 0.0) {
      throw NotStrictlyConvex("repeated vertex " + std::to_string(j));
    }
  }
  double turning = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const Vec2 a = edges[j];
    const Vec2 b = edges[(j + 1) % m];
    const double c = cross(a, b);
    if (!(c > 0.0)) {
      throw NotStrictlyConvex("vertex " + std::to_string((j + 1) % m) +
                              " is not a strict left turn");
    }
    turning += std::atan2(c, dot(a, b));
  }
  if (std::abs(turning - kTwoPi) > 1e-9) {
    throw NotStrictlyConvex("boundary winds more than once");
  }
  return ConvexPolygon(std::move(vertices), EdgeSet(std::move(edges)));
}

ConvexPolygon polygon_from_edges(const EdgeSet& edges, double zero_sum_rel_tol) {
  if (edges.size() < 3) {
    throw InvalidArgument("a polygon needs at least 3 edges, got " +
                          std::to_string(edges.size()));
  }
  if (!edges.zero_sum(zero_sum_rel_tol)) {
    throw ZeroSumViolation("edge vectors do not sum to zero (residual " +
                           std::to_string(edges.sum().norm()) + ")");
  }
  if (!edges.all_nonzero()) throw DegenerateEdge("edge set contains a zero vector");
  if (!edges.pairwise_distinct_directions()) {
    throw RepeatedDirection("two edges share a direction");
  }

  std::vector<Vec2> sorted(edges.edges().begin(), edges.edges().end());
  std::stable_sort(sorted.begin(), sorted.end(), [](Vec2 a, Vec2 b) {
    return angle_0_2pi(a) < angle_0_2pi(b);
  });

  std::vector<Vec2> vertices;
  vertices.reserve(sorted.size());
  Vec2 cursor{0.0, 0.0};
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    vertices.push_back(cursor);
    cursor += sorted[j];
  }
  return ConvexPolygon(std::move(vertices), EdgeSet(std::move(sorted)));
}

double perimeter(const ConvexPolygon& p) { return p.edges().total_length(); }

double diameter(const ConvexPolygon& p) {
  const auto v = p.vertices();
  double best = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      best = std::max(best, (v[i] - v[j]).norm());
    }
  }
  return best;
}

std::vector<std::pair<std::size_t, std::size_t>> diameter_pairs(
    const ConvexPolygon& p, double rel_tol) {
  const double d = diameter(p);
  const auto v = p.vertices();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if ((v[i] - v[j]).norm() >= d * (1.0 - rel_tol)) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

double support_width(const ConvexPolygon& p, Vec2 u) {
  if (!u.is_finite() || std::abs(u.norm() - 1.0) > 1e-12) {
    throw NonUnitDirection("direction must have unit length");
  }
  double hi = -std::numeric_limits<double>::infinity();
  double lo = std::numeric_limits<double>::infinity();
  for (const Vec2& x : p.vertices()) {
    const double s = dot(x, u);
    hi = std::max(hi, s);
    lo = std::min(lo, s);
  }
  // h(P, u) + h(P, -u) = max <x,u> + max <x,-u>
  return hi - lo;
}

ProjectionMax max_abs_projection_sum(std::span<const Vec2> edges) {
  if (edges.empty()) throw EmptyEdgeSet("max_abs_projection_sum needs edges");

  // h(psi) = sum |<e_j, u(psi)>| has period pi. Its kinks sit where some
  // edge is orthogonal to u; between kinks the signs are fixed and h is the
  // sinusoid <w, u(psi)> with w = sum s_j e_j, peaking at psi = angle(w).
  std::vector<double> breaks;
  breaks.reserve(edges.size());
  for (const Vec2& e : edges) {
    if (e.x != 0.0 || e.y != 0.0) breaks.push_back(reduce_mod_pi(e.angle() + kPi / 2.0));
  }
  if (breaks.empty()) return {0.0, Vec2{1.0, 0.0}};
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  std::vector<double> candidates = breaks;
  for (std::size_t k = 0; k < breaks.size(); ++k) {
    const double lo = breaks[k];
    const double hi = (k + 1 < breaks.size()) ? breaks[k + 1] : breaks.front() + kPi;
    const Vec2 mid = unit_at(0.5 * (lo + hi));
    Vec2 w;
    for (const Vec2& e : edges) {
      const double s = dot(e, mid);
      if (s > 0.0) {
        w += e;
      } else if (s < 0.0) {
        w += -e;
      }
    }
    if (w.x != 0.0 || w.y != 0.0) candidates.push_back(reduce_mod_pi(w.angle()));
  }

  ProjectionMax best{-1.0, {}};
  for (double psi : candidates) {
    const Vec2 u = unit_at(psi);
    const double h = sum_abs_projection(edges, u);
    if (h > best.value) best = {h, u};
  }
  return best;
}

double ratio_r(const ConvexPolygon& p) { return diameter(p) / perimeter(p); }

double ratio_r_from_projection(const ConvexPolygon& p) {
  return max_abs_projection_sum(p.edges()).value / (2.0 * perimeter(p));
}

}  // namespace optiframe
