#include "optiframe/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace optiframe::sampling {

EdgeSet random_convex_edges(Rng& rng, std::size_t m) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> length(0.1, 1.0);
  for (;;) {
    std::vector<double> angles(m);
    for (double& a : angles) a = angle(rng);
    std::sort(angles.begin(), angles.end());

    std::vector<Vec2> edges;
    edges.reserve(m);
    Vec2 total;
    for (double a : angles) {
      edges.push_back(length(rng) * unit_at(a));
      total += edges.back();
    }
    const Vec2 mean = (1.0 / static_cast<double>(m)) * total;
    for (Vec2& e : edges) e = e - mean;

    EdgeSet set(std::move(edges));
    // Re-centering can in principle collapse an edge or merge two
    // directions; draw again in that case.
    if (set.all_nonzero() && set.pairwise_distinct_directions(1e-6)) return set;
  }
}

std::vector<Vec2> random_unit_vectors(Rng& rng, std::size_t m) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<Vec2> out;
  out.reserve(m);
  for (std::size_t j = 0; j < m; ++j) out.push_back(unit_at(angle(rng)));
  return out;
}

Frame random_tight_frame(Rng& rng, std::size_t m) {
  const EdgeSet edges = random_convex_edges(rng, m);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::bernoulli_distribution coin(0.5);
  const double rot = angle(rng);
  const double c = std::cos(rot);
  const double s = std::sin(rot);

  std::vector<Vec2> rows;
  rows.reserve(m);
  for (const Vec2& e : edges.edges()) {
    const Vec2 a = edge_to_half(e).to_cartesian();
    Vec2 r{c * a.x - s * a.y, s * a.x + c * a.y};
    if (coin(rng)) r = -r;
    rows.push_back(r);
  }
  return Frame(std::move(rows));
}

Frame random_gaussian_frame(Rng& rng, std::size_t m) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Vec2> rows;
  rows.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double x = normal(rng);
    const double y = normal(rng);
    rows.push_back({x, y});
  }
  return Frame(std::move(rows));
}

std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace optiframe::sampling
