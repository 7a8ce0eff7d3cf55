#pragma once

#include <string>

#include "optiframe/frames.hpp"
#include "optiframe/geometry.hpp"

namespace optiframe::svg {

inline constexpr int kCanvas = 800;

/// Polygon scaled to unit diameter and centered; vertex pairs at maximal
/// distance are drawn as dashed chords.
std::string polygon_figure(const ConvexPolygon& polygon);

/// One arrow per frame vector from the origin; the longest reaches 45% of the canvas.
std::string frame_figure(const Frame& frame);

}  // namespace optiframe::svg
