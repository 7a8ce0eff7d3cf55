#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "optiframe/frames.hpp"
#include "optiframe/geometry.hpp"

namespace optiframe::sampling {

using Rng = std::mt19937_64;

/// Edges of a random strictly convex m-gon: sorted uniform angles, lengths in
/// [0.1, 1], then the mean edge subtracted so the set sums to zero.
EdgeSet random_convex_edges(Rng& rng, std::size_t m);

/// m unit vectors with uniform directions (no zero-sum constraint).
std::vector<Vec2> random_unit_vectors(Rng& rng, std::size_t m);

/// Tight irreducible frame: f^{-1} of a random convex edge set, then random
/// per-row signs and a random common rotation.
Frame random_tight_frame(Rng& rng, std::size_t m);

/// Rows with independent standard normal entries.
Frame random_gaussian_frame(Rng& rng, std::size_t m);

/// Uniform integer in [lo, hi].
std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi);

}  // namespace optiframe::sampling
