#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "optiframe/constructions.hpp"
#include "optiframe/enumeration.hpp"
#include "optiframe/errors.hpp"
#include "optiframe/frames.hpp"
#include "optiframe/serialize.hpp"
#include "optiframe/verify.hpp"
#include "svg.hpp"

namespace {

using namespace optiframe;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

// Thrown for arguments that parse but make no sense (bad m, bad class index).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fixed7(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.7f", v);
  return buf;
}

std::string sig9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", io::round_significant(v));
  return buf;
}

std::string sign_string(const SignVector& eps) {
  std::string s = "[";
  for (std::size_t j = 0; j < eps.m(); ++j) {
    if (j) s += ' ';
    s += eps.signs()[j] > 0 ? '+' : '-';
  }
  return s + "]";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
}

void check_m(std::size_t m) {
  if (m < 3 || m > kMaxEnumerationM) {
    throw UsageError("m must be between 3 and " + std::to_string(kMaxEnumerationM));
  }
}

// r of the optimal polygon as a closed form, simplified for m = 3.
std::string r_formula(std::size_t m) {
  if (m == 3) return "1/3";
  return "1/(" + std::to_string(2 * m) + " sin(π/" + std::to_string(2 * m) + "))";
}

// --- enumerate ---------------------------------------------------------------

struct EnumerateArgs {
  std::size_t m = 0;
  bool raw = false;
  std::string json;
};

int cmd_enumerate(const EnumerateArgs& a) {
  check_m(a.m);
  const std::vector<SignClass> classes = enumerate_solution_classes(a.m, a.raw);
  std::cout << classes.size() << " classes";
  if (!has_odd_factor(a.m)) std::cout << " (m is a power of two; see literature values)";
  std::cout << '\n';
  if (a.m == 4 || a.m == 8) std::cout << "count from literature: 1\n";

  for (std::size_t k = 0; k < classes.size(); ++k) {
    const SignClass& c = classes[k];
    std::cout << "class " << k << ": " << sign_string(c.canonical) << " orbit " << c.orbit_size
              << ", solutions " << c.raw_count << '\n';
    if (a.raw) {
      for (const SignVector& s : c.raw_members) std::cout << "  " << sign_string(s) << '\n';
    }
  }
  if (!a.json.empty()) write_file(a.json, io::classes_json(a.m, classes, a.raw));
  return 0;
}

// --- table -------------------------------------------------------------------

struct TableArgs {
  std::size_t max_m = 15;
  std::string csv;
};

int cmd_table(const TableArgs& a) {
  if (a.max_m < 3 || a.max_m > kMaxEnumerationM) {
    throw UsageError("--max-m must be between 3 and " + std::to_string(kMaxEnumerationM));
  }
  std::ostringstream csv;
  csv << "m,classes,beta_min,r_min,r_min_formula,note\n";
  std::cout << "m, #classes, beta_min, r_min\n";
  for (std::size_t m = 3; m <= a.max_m; ++m) {
    const ClassCount cc = class_count(m);
    if (cc.power_of_two) {
      const std::string note =
          cc.literature_count ? "count from literature: " + std::to_string(*cc.literature_count)
                              : "no enumerated solutions";
      std::cout << m << ", " << cc.count << ", -, -  (" << note << ")\n";
      csv << m << ',' << cc.count << ",,,," << note << '\n';
      continue;
    }
    const double beta = beta_min_bound(m).value;
    const double r = 1.0 / (2.0 * m * std::sin(std::numbers::pi / (2.0 * m)));
    std::cout << m << ", " << cc.count << ", " << fixed7(beta) << ", " << r_formula(m) << '\n';
    csv << m << ',' << cc.count << ',' << sig9(beta) << ',' << sig9(r) << ',' << r_formula(m)
        << ",\n";
  }
  if (!a.csv.empty()) write_file(a.csv, csv.str());
  return 0;
}

// --- polygon / frame ---------------------------------------------------------

struct ShapeArgs {
  std::size_t m = 0;
  std::size_t k = 0;
  std::string svg;
  std::string json;
  std::string csv;
  std::string pair;
};

struct Selected {
  std::string label;
  Frame frame;
  ConvexPolygon polygon;
  std::optional<SignVector> sign;
};

Selected select_shape(const ShapeArgs& a) {
  check_m(a.m);
  if (a.m == 4) {
    if (a.k != 0) throw UsageError("m=4 has a single class (index 0)");
    return {"E_4'", optimal_frame_m4(), optimal_polygon_m4(), std::nullopt};
  }
  if (!has_odd_factor(a.m)) {
    throw UsageError("m=" + std::to_string(a.m) + ": known from literature, out of scope");
  }
  const std::vector<SignClass> classes = enumerate_solution_classes(a.m);
  if (a.k >= classes.size()) {
    throw UsageError("class index " + std::to_string(a.k) + " out of range; m=" +
                     std::to_string(a.m) + " has " + std::to_string(classes.size()) + " classes");
  }
  const SignVector& eps = classes[a.k].canonical;
  return {sign_string(eps), optimal_frame_from_sign(eps), optimal_polygon_from_sign(eps), eps};
}

int cmd_polygon(const ShapeArgs& a) {
  const Selected s = select_shape(a);
  const ConvexPolygon& p = s.polygon;
  std::cout << "m=" << a.m << " class " << a.k << " " << s.label << '\n'
            << "diameter " << fixed7(diameter(p)) << ", perimeter " << fixed7(perimeter(p))
            << ", r " << fixed7(ratio_r(p)) << ", diameter pairs " << diameter_pairs(p).size()
            << '\n';
  for (const Vec2& v : p.vertices()) std::cout << "  " << fixed7(v.x) << ' ' << fixed7(v.y) << '\n';
  if (!a.json.empty()) write_file(a.json, io::polygon_json(p));
  if (!a.svg.empty()) write_file(a.svg, svg::polygon_figure(p));
  return 0;
}

int cmd_frame(const ShapeArgs& a) {
  const Selected s = select_shape(a);
  if (!a.pair.empty() && !s.sign) throw UsageError("--pair needs a sign class; m=4 has none");
  const ConditionReport report = condition_number(s.frame);
  std::cout << "m=" << a.m << " class " << a.k << " " << s.label << '\n'
            << "beta " << fixed7(report.beta) << " (" << to_string(report.method) << ")\n";
  for (const Vec2& v : s.frame.vectors()) {
    double deg = v.angle() * 180.0 / std::numbers::pi;
    if (deg < 0.0) deg += 360.0;
    std::cout << "  " << fixed7(v.x) << ' ' << fixed7(v.y) << "  angle " << fixed7(deg)
              << " deg\n";
  }
  if (!a.json.empty()) write_file(a.json, io::frame_fixture_json(s.label, s.frame, report));
  if (!a.csv.empty()) write_file(a.csv, io::matrix_csv(s.frame));
  if (!a.pair.empty()) write_file(a.pair, io::optimal_pair_json(make_optimal_pair(*s.sign)));
  if (!a.svg.empty()) write_file(a.svg, svg::frame_figure(s.frame));
  return 0;
}

// --- beta / harmonic / verify ------------------------------------------------

int cmd_beta(const std::string& matrix) {
  const Frame frame = io::read_matrix_csv_file(matrix);
  std::cout << io::condition_report_json(condition_number(frame));
  return 0;
}

int cmd_harmonic(std::size_t m, const std::string& json) {
  if (m < 2) throw UsageError("m must be at least 2");
  const Frame frame = harmonic_frame(m);
  const ConditionReport report = condition_number(frame);
  std::cout << io::condition_report_json(report);
  if (!json.empty()) write_file(json, io::frame_fixture_json("E_" + std::to_string(m), frame, report));
  return 0;
}

int cmd_verify(const std::string& suite) {
  std::vector<verify::CheckResult> results;
  try {
    results = verify::run_suite(suite);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  bool ok = true;
  for (const verify::CheckResult& r : results) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << " (" << secs << " s): " << r.detail
              << '\n';
    ok = ok && r.passed;
  }
  return ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal phase-retrieval frames in R^2 and their Reinhardt polygons"};
  app.require_subcommand(1);

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate optimal sign classes for m");
  enumerate->add_option("m", en.m, "Number of frame vectors")->required();
  enumerate->add_flag("--raw", en.raw, "List every solution in each orbit");
  enumerate->add_option("--json", en.json, "Write the classes as JSON");

  TableArgs tb;
  auto* table = app.add_subcommand("table", "Class counts and minimal condition numbers");
  table->add_option("--max-m", tb.max_m, "Largest m (default 15)");
  table->add_option("--csv", tb.csv, "Write the table as CSV");

  ShapeArgs pg;
  auto* polygon = app.add_subcommand("polygon", "Optimal polygon for a class");
  polygon->add_option("m", pg.m)->required();
  polygon->add_option("--class", pg.k, "Class index in canonical order");
  polygon->add_option("--svg", pg.svg);
  polygon->add_option("--json", pg.json);

  ShapeArgs fr;
  auto* frame = app.add_subcommand("frame", "Optimal frame for a class");
  frame->add_option("m", fr.m)->required();
  frame->add_option("--class", fr.k, "Class index in canonical order");
  frame->add_option("--svg", fr.svg);
  frame->add_option("--json", fr.json);
  frame->add_option("--csv", fr.csv, "Write the frame matrix, readable by 'beta --matrix'");
  frame->add_option("--pair", fr.pair, "Write sign, polygon and frame together as JSON");

  std::string matrix;
  auto* beta = app.add_subcommand("beta", "Condition number of an m x 2 matrix");
  beta->add_option("--matrix", matrix, "CSV file, two columns per row")->required();

  std::size_t hm = 0;
  std::string hjson;
  auto* harmonic = app.add_subcommand("harmonic", "Condition number of the harmonic frame");
  harmonic->add_option("m", hm)->required();
  harmonic->add_option("--json", hjson, "Write the frame and its report as JSON");

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run invariant suites");
  verify_cmd->add_option("--suite", suite, "Suite name or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    if (*enumerate) return cmd_enumerate(en);
    if (*table) return cmd_table(tb);
    if (*polygon) return cmd_polygon(pg);
    if (*frame) return cmd_frame(fr);
    if (*beta) return cmd_beta(matrix);
    if (*harmonic) return cmd_harmonic(hm, hjson);
    if (*verify_cmd) return cmd_verify(suite);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const optiframe::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
