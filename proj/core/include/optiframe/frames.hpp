#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "optiframe/geometry.hpp"

namespace optiframe {

/// Rows a_1..a_m of an m x 2 measurement matrix.
class Frame {
 public:
  Frame() = default;
  /// Throws InvalidArgument on an empty list or a non-finite entry.
  explicit Frame(std::vector<Vec2> vectors);

  std::span<const Vec2> vectors() const { return vectors_; }
  std::size_t m() const { return vectors_.size(); }
  const Vec2& operator[](std::size_t i) const { return vectors_[i]; }

 private:
  std::vector<Vec2> vectors_;
};

/// Entries of A^T A = [[a, c], [c, b]].
struct GramEntries {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double trace() const { return a + b; }
  double determinant() const { return a * b - c * c; }
};

GramEntries gram(const Frame& frame);

inline constexpr double kTightTol = 1e-9;

struct TightnessCertificate {
  bool tight = false;
  GramEntries gram;
};

/// Tight iff |a - b| <= tol (a + b) and |c| <= tol (a + b); the zero frame is
/// not tight.
TightnessCertificate is_tight(const Frame& frame, double tol = kTightTol);

inline constexpr double kParallelTol = 1e-9;

/// No zero row and no two rows parallel (|sin angle| <= angle_tol counts as
/// parallel).
bool is_irreducible(const Frame& frame, double angle_tol = kParallelTol);

/// rank(A) == 2, judged by det(A^T A) > 1e-12 trace^2.
bool has_full_rank(const Frame& frame);

/// (|<a_j, x>|)_j.
std::vector<double> phaseless_map(const Frame& frame, Vec2 x);

/// U_A = ||A||_2.
double upper_lipschitz(const Frame& frame);

/// f-images of the rows, each row taken in the half-plane T first.
std::vector<Vec2> frame_edges(const Frame& frame);

/// Drops zero edges and replaces same-direction edges by their sum.
EdgeSet merge_parallel_edges(std::span<const Vec2> edges, double angle_tol = 2.0 * kParallelTol);

enum class ConditionMethod { exact_tight, exact_reduced, numeric };
std::string_view to_string(ConditionMethod method);

/// A pair attaining the lower Lipschitz quotient: x = (cos theta, sin theta),
/// y = t (-sin theta, cos theta).
struct LowerWitness {
  double theta = 0.0;
  double t = 0.0;
  Vec2 x;
  Vec2 y;
};

struct ConditionReport {
  std::size_t m = 0;
  double upper = 0.0;
  double lower = 0.0;
  double beta = 0.0;  // +inf when lower == 0
  ConditionMethod method = ConditionMethod::numeric;
  std::optional<LowerWitness> witness;
  /// Maximizing direction of sum |<e_j, u>| (exact methods only).
  std::optional<Vec2> edge_direction;
};

/// || |Ax| - |Ay| || / dist(x, y) for x = unit(theta), y = t unit(theta + pi/2).
double lower_quotient(const Frame& frame, double theta, double t);

struct NumericGrid {
  std::size_t n_theta = 4096;
  std::size_t n_t = 512;
};

struct LowerEstimate {
  double value = 0.0;
  LowerWitness witness;
};

/// Minimizes lower_quotient over theta in [0, pi), t in [0, 1]: a coarse grid,
/// then bracket refinement of the best cells until the theta bracket is
/// narrower than refine_tol. Returns 0 for a rank-deficient frame.
LowerEstimate lower_lipschitz_numeric(const Frame& frame, NumericGrid grid = {},
                                      double refine_tol = 1e-10);

/// Exact condition number of a tight frame through its edge polygon.
/// Throws NotTight when is_tight(frame) fails.
ConditionReport condition_number_tight(const Frame& frame);

/// Exact route for tight frames, numeric optimizer otherwise.
ConditionReport condition_number(const Frame& frame);

/// Condition number of the harmonic frame E_m (closed form, both parities).
double beta_harmonic(std::size_t m);

struct BetaBound {
  double value = 0.0;
  /// True when m has an odd factor; for m = 2^s the bound is strict.
  bool attained = false;
};

/// 1 / sqrt(1 - 1 / (m sin(pi / 2m))).
BetaBound beta_min_bound(std::size_t m);

struct UniversalBounds {
  double real_bound = 0.0;     // sqrt(pi / (pi - 2))
  double complex_bound = 0.0;  // sqrt(4 / (4 - pi))
};

UniversalBounds universal_lower_bounds();

/// Upper bound on L_A^2: (1/2)(1 - 1/(m sin(pi/2m))) sum ||a_j||^2.
double lower_lipschitz_squared_cap(const Frame& frame);

}  // namespace optiframe
