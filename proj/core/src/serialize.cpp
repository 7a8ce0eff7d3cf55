#include "optiframe/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

#include "json.hpp"
#include "optiframe/errors.hpp"

namespace optiframe::io {
namespace {

using nlohmann::ordered_json;

ordered_json num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return round_significant(v);
}

ordered_json point(Vec2 v) { return ordered_json::array({num(v.x), num(v.y)}); }

ordered_json points(std::span<const Vec2> vs) {
  ordered_json arr = ordered_json::array();
  for (const Vec2& v : vs) arr.push_back(point(v));
  return arr;
}

ordered_json signs(const SignVector& eps) {
  ordered_json arr = ordered_json::array();
  for (int s : eps.signs()) arr.push_back(s);
  return arr;
}

ordered_json report_object(const ConditionReport& r) {
  ordered_json j;
  j["m"] = r.m;
  j["U"] = num(r.upper);
  j["L"] = num(r.lower);
  j["beta"] = num(r.beta);
  j["method"] = std::string(to_string(r.method));
  ordered_json w = ordered_json::object();
  if (r.witness) {
    w["theta"] = num(r.witness->theta);
    w["t"] = num(r.witness->t);
    w["x"] = point(r.witness->x);
    w["y"] = point(r.witness->y);
  }
  if (r.edge_direction) w["u"] = point(*r.edge_direction);
  j["witness"] = std::move(w);
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_number(const std::string& field, std::size_t line_no) {
  const std::string t = trim(field);
  if (t.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty field");
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || !std::isfinite(v)) {
    throw ParseError("line " + std::to_string(line_no) + ": '" + t + "' is not a finite number");
  }
  return v;
}

}  // namespace

double round_significant(double value, int digits) {
  if (!std::isfinite(value) || value == 0.0) return value == 0.0 ? 0.0 : value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string polygon_json(const ConvexPolygon& polygon) {
  ordered_json j;
  j["m"] = polygon.m();
  j["vertices"] = points(polygon.vertices());
  j["edges"] = points(polygon.edges().edges());
  j["diameter"] = num(diameter(polygon));
  j["perimeter"] = num(perimeter(polygon));
  j["r"] = num(ratio_r(polygon));
  return dump(j);
}

std::string classes_json(std::size_t m, const std::vector<SignClass>& classes,
                         bool include_members) {
  ordered_json j;
  j["m"] = m;
  ordered_json arr = ordered_json::array();
  std::size_t raw_total = 0;
  for (const SignClass& c : classes) {
    ordered_json entry;
    entry["canonical"] = signs(c.canonical);
    entry["orbit_size"] = c.orbit_size;
    entry["raw_count"] = c.raw_count;
    if (include_members) {
      ordered_json members = ordered_json::array();
      for (const SignVector& s : c.raw_members) members.push_back(signs(s));
      entry["members"] = std::move(members);
    }
    raw_total += c.raw_count;
    arr.push_back(std::move(entry));
  }
  j["classes"] = std::move(arr);
  j["raw_total"] = raw_total;
  return dump(j);
}

std::string condition_report_json(const ConditionReport& report) {
  return dump(report_object(report));
}

std::string optimal_pair_json(const OptimalPair& pair) {
  ordered_json j;
  j["m"] = pair.sign.m();
  j["sign"] = signs(pair.sign);
  j["vertices"] = points(pair.polygon.vertices());
  j["frame"] = points(pair.frame.vectors());
  j["beta"] = num(pair.beta);
  j["r"] = num(pair.r);
  return dump(j);
}

std::string frame_fixture_json(std::string_view name, const Frame& frame,
                               const ConditionReport& report) {
  ordered_json j;
  j["name"] = std::string(name);
  j["m"] = frame.m();
  j["vectors"] = points(frame.vectors());
  j["report"] = report_object(report);
  return dump(j);
}

Frame read_matrix_csv(std::istream& in) {
  std::vector<Vec2> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto comma = t.find(',');
    if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected exactly two columns");
    }
    rows.push_back({parse_number(t.substr(0, comma), line_no),
                    parse_number(t.substr(comma + 1), line_no)});
  }
  if (rows.empty()) throw ParseError("matrix has no rows");
  return Frame(std::move(rows));
}

Frame read_matrix_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_matrix_csv(in);
}

std::string matrix_csv(const Frame& frame) {
  // Full precision: these files are inputs, and a tight frame rounded to 9
  // digits is no longer tight at the 1e-9 tolerance.
  std::string out;
  char buf[96];
  for (const Vec2& v : frame.vectors()) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", v.x == 0.0 ? 0.0 : v.x, v.y == 0.0 ? 0.0 : v.y);
    out += buf;
  }
  return out;
}

}  // namespace optiframe::io
