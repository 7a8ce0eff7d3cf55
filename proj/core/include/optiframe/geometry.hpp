#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

namespace optiframe {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr bool operator==(const Vec2&) const = default;

  double norm() const { return std::hypot(x, y); }
  /// Direction angle in (-pi, pi].
  double angle() const { return std::atan2(y, x); }
  bool is_finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

inline Vec2 unit_at(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Direction angle mapped into [0, 2pi).
double angle_0_2pi(Vec2 v);

/// A point of the half-plane T = {t (cos phi, sin phi) : t >= 0, phi in (0, pi]}.
/// The zero vector is stored as (0, pi).
struct PolarVector {
  double t = 0.0;
  double phi = std::numbers::pi;

  /// Validates t >= 0 and phi in (0, pi]; canonicalizes t == 0 to phi = pi.
  static PolarVector make(double t, double phi);

  Vec2 to_cartesian() const { return t * unit_at(phi); }
  bool operator==(const PolarVector&) const = default;
};

/// Reflects v through the origin when needed so the result lies in T.
Vec2 normalize_to_half_plane(Vec2 v);

/// Polar coordinates of a vector already in T (call normalize_to_half_plane first).
PolarVector to_polar(Vec2 v_in_half_plane);

/// f(a) = t^2 (cos 2phi, sin 2phi).
Vec2 half_to_edge(const PolarVector& a);

/// Inverse of half_to_edge; total on R^2.
PolarVector edge_to_half(Vec2 e);

/// f evaluated on an arbitrary vector, i.e. on whichever of {v, -v} lies in T.
/// In coordinates this is (x^2 - y^2, 2xy), so no branch on the sign is needed.
constexpr Vec2 squared_direction_map(Vec2 v) {
  return {v.x * v.x - v.y * v.y, 2.0 * v.x * v.y};
}

inline constexpr double kZeroSumRelTol = 1e-9;
inline constexpr double kDirectionTol = 1e-12;

class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<Vec2> edges) : edges_(std::move(edges)) {}

  std::span<const Vec2> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const Vec2& operator[](std::size_t i) const { return edges_[i]; }

  Vec2 sum() const;
  double total_length() const;

  /// ||sum e_j|| <= rel_tol * sum ||e_j||.
  bool zero_sum(double rel_tol = kZeroSumRelTol) const;
  bool all_nonzero() const;
  /// Directions compared modulo 2pi, so antipodal edges count as distinct.
  bool pairwise_distinct_directions(double angle_tol = kDirectionTol) const;

 private:
  std::vector<Vec2> edges_;
};

/// Counterclockwise, strictly convex polygon. Built by polygon_from_edges or
/// validated by from_vertices.
class ConvexPolygon {
 public:
  /// Throws NotStrictlyConvex unless the vertices are counterclockwise and
  /// every turn is strictly left, winding exactly once.
  static ConvexPolygon from_vertices(std::vector<Vec2> vertices);

  std::span<const Vec2> vertices() const { return vertices_; }
  /// edges()[j] = vertices()[j+1] - vertices()[j], cyclically.
  const EdgeSet& edges() const { return edges_; }
  std::size_t m() const { return vertices_.size(); }

 private:
  friend ConvexPolygon polygon_from_edges(const EdgeSet&, double);
  ConvexPolygon(std::vector<Vec2> vertices, EdgeSet edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {}

  std::vector<Vec2> vertices_;
  EdgeSet edges_;
};

/// The unique (up to translation) strictly convex polygon with edge set E.
/// Edges are sorted by direction in [0, 2pi) and accumulated from (0, 0).
ConvexPolygon polygon_from_edges(const EdgeSet& edges,
                                 double zero_sum_rel_tol = kZeroSumRelTol);

double perimeter(const ConvexPolygon& p);
double diameter(const ConvexPolygon& p);
/// Index pairs (i < j) of vertices whose distance is within rel_tol of the diameter.
std::vector<std::pair<std::size_t, std::size_t>> diameter_pairs(
    const ConvexPolygon& p, double rel_tol = 1e-9);

/// w(P, u) = h(P, u) + h(P, -u); u must be a unit vector.
double support_width(const ConvexPolygon& p, Vec2 u);

struct ProjectionMax {
  double value = 0.0;
  /// Maximizing unit direction, with angle in [0, pi).
  Vec2 direction;
};

/// Exact maximum over unit u of sum_j |<e_j, u>|. Zero-sum is not required.
ProjectionMax max_abs_projection_sum(std::span<const Vec2> edges);
inline ProjectionMax max_abs_projection_sum(const EdgeSet& edges) {
  return max_abs_projection_sum(edges.edges());
}

/// diameter / perimeter.
double ratio_r(const ConvexPolygon& p);
/// The same ratio computed from edges alone: max_u sum|<e_j,u>| / (2 perimeter).
double ratio_r_from_projection(const ConvexPolygon& p);

}  // namespace optiframe
