#pragma once

// Brute-force checkers. Each one recomputes its quantity from the
// definitions, sharing no code path with the routine it is used to check.

#include <cstddef>
#include <span>
#include <vector>

#include "optiframe/cyclotomic.hpp"
#include "optiframe/frames.hpp"
#include "optiframe/geometry.hpp"

namespace optiframe::oracle {

struct SampledLipschitz {
  /// Smallest sampled quotient. Sampling a subset of the domain can only
  /// overestimate an infimum, so L_hat >= L.
  double lower = 0.0;
  /// Largest sampled ||Ax||, so U_hat <= U.
  double upper = 0.0;
};

/// Evaluates || |Ax| - |Ay| || / dist(x, y) on theta_i = i pi / n_theta,
/// t_k = k / (n_t - 1), with y = t x_perp. No refinement.
SampledLipschitz sampled_lipschitz(const Frame& frame, std::size_t n_theta, std::size_t n_t);

double brute_force_diameter(const ConvexPolygon& polygon);

struct Discrepancy {
  double value = 0.0;
  std::vector<int> signs;
};

inline constexpr std::size_t kMaxDiscrepancyM = 24;

/// max over eps in {+-1}^m of ||sum eps_j e_j||. Throws NonUnitEdges unless
/// every ||e_j|| = 1 within 1e-12, MTooLarge for m > 24.
Discrepancy discrepancy_max(std::span<const Vec2> unit_edges);

inline constexpr std::size_t kMaxBruteForceM = 20;

/// All eps with |sum eps_j zeta^j| < 1e-9 in floating point, ascending by
/// enumeration index, no deduplication.
std::vector<SignVector> brute_force_solutions(std::size_t m);

}  // namespace optiframe::oracle
