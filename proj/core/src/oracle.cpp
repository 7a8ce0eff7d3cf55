#include "optiframe/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "optiframe/errors.hpp"
#include "optiframe/parallel.hpp"

namespace optiframe::oracle {

SampledLipschitz sampled_lipschitz(const Frame& frame, std::size_t n_theta, std::size_t n_t) {
  if (n_theta < 1 || n_t < 2) throw InvalidArgument("sampling grid needs n_theta >= 1, n_t >= 2");
  const auto rows = frame.vectors();
  const std::size_t m = rows.size();

  const std::size_t chunks = std::min<std::size_t>(n_theta, 64);
  std::vector<SampledLipschitz> partial(chunks,
                                        {std::numeric_limits<double>::infinity(), 0.0});
  parallel_chunks(n_theta, chunks, [&](std::size_t c, std::uint64_t lo, std::uint64_t hi) {
    std::vector<double> ax(m);
    std::vector<double> ay(m);
    SampledLipschitz local = partial[c];
    for (std::uint64_t i = lo; i < hi; ++i) {
      const double theta = std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_theta);
      const double cx = std::cos(theta);
      const double sx = std::sin(theta);
      double norm_ax = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        ax[j] = std::fabs(rows[j].x * cx + rows[j].y * sx);
        ay[j] = std::fabs(-rows[j].x * sx + rows[j].y * cx);
        norm_ax += ax[j] * ax[j];
      }
      local.upper = std::max(local.upper, std::sqrt(norm_ax));
      for (std::size_t k = 0; k < n_t; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(n_t - 1);
        double num = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
          const double d = ax[j] - t * ay[j];
          num += d * d;
        }
        // x and y are orthogonal, so ||x - y|| = ||x + y|| = sqrt(1 + t^2).
        local.lower = std::min(local.lower, std::sqrt(num / (1.0 + t * t)));
      }
    }
    partial[c] = local;
  });

  SampledLipschitz out{std::numeric_limits<double>::infinity(), 0.0};
  for (const auto& p : partial) {
    out.lower = std::min(out.lower, p.lower);
    out.upper = std::max(out.upper, p.upper);
  }
  return out;
}

double brute_force_diameter(const ConvexPolygon& polygon) {
  const auto v = polygon.vertices();
  double best_sq = 0.0;
  for (const Vec2& p : v) {
    for (const Vec2& q : v) {
      const double dx = p.x - q.x;
      const double dy = p.y - q.y;
      best_sq = std::max(best_sq, dx * dx + dy * dy);
    }
  }
  return std::sqrt(best_sq);
}

Discrepancy discrepancy_max(std::span<const Vec2> unit_edges) {
  const std::size_t m = unit_edges.size();
  if (m > kMaxDiscrepancyM) {
    throw MTooLarge("discrepancy_max supports m <= 24, got " + std::to_string(m));
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (std::abs(std::hypot(unit_edges[j].x, unit_edges[j].y) - 1.0) > 1e-12) {
      throw NonUnitEdges("edge " + std::to_string(j) + " is not a unit vector");
    }
  }
  Discrepancy best{-1.0, {}};
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double s = ((mask >> j) & 1U) ? -1.0 : 1.0;
      sx += s * unit_edges[j].x;
      sy += s * unit_edges[j].y;
    }
    const double v = std::sqrt(sx * sx + sy * sy);
    if (v > best.value) {
      best.value = v;
      best.signs.assign(m, 1);
      for (std::size_t j = 0; j < m; ++j) {
        if ((mask >> j) & 1U) best.signs[j] = -1;
      }
    }
  }
  return best;
}

std::vector<SignVector> brute_force_solutions(std::size_t m) {
  if (m < 3) throw InvalidArgument("m must be at least 3");
  if (m > kMaxBruteForceM) {
    throw MTooLarge("brute_force_solutions supports m <= 20, got " + std::to_string(m));
  }
  std::vector<SignVector> out;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    SignVector eps = SignVector::from_index(idx, m);
    if (sign_sum_numeric(eps) < 1e-9) out.push_back(std::move(eps));
  }
  return out;
}

}  // namespace optiframe::oracle
