#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "optiframe/constructions.hpp"
#include "optiframe/enumeration.hpp"
#include "optiframe/frames.hpp"
#include "optiframe/geometry.hpp"

namespace optiframe::io {

/// Rounds to `digits` significant decimal digits; JSON and CSV output go
/// through this so repeated runs are byte-identical.
double round_significant(double value, int digits = 9);

/// {"m", "vertices", "edges", "diameter", "perimeter", "r"}
std::string polygon_json(const ConvexPolygon& polygon);

/// {"m", "classes": [{"canonical", "orbit_size", "raw_count"[, "members"]}], "raw_total"}
std::string classes_json(std::size_t m, const std::vector<SignClass>& classes,
                         bool include_members = false);

/// {"m", "U", "L", "beta" (number or "inf"), "method", "witness"}
std::string condition_report_json(const ConditionReport& report);

/// {"sign", "vertices", "frame", "beta", "r"}
std::string optimal_pair_json(const OptimalPair& pair);

/// Fixture document: {"name", "m", "vectors", "report"}.
std::string frame_fixture_json(std::string_view name, const Frame& frame,
                               const ConditionReport& report);

/// Two decimal columns per line; blank lines and lines starting with '#'
/// are skipped. Throws ParseError naming the offending line.
Frame read_matrix_csv(std::istream& in);
Frame read_matrix_csv_file(const std::string& path);

std::string matrix_csv(const Frame& frame);

}  // namespace optiframe::io
