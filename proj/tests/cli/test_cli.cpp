#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" OPTIFRAME_CLI "\" " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("optiframe_cli_" + std::to_string(getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

// Numbers compared with a tolerance; everything else must match exactly.
void expect_json_close(const json& a, const json& b, const std::string& where) {
  if (a.is_number() && b.is_number()) {
    EXPECT_NEAR(a.get<double>(), b.get<double>(), 1e-8) << where;
    return;
  }
  ASSERT_EQ(a.type(), b.type()) << where;
  if (a.is_object()) {
    ASSERT_EQ(a.size(), b.size()) << where;
    for (const auto& [k, v] : a.items()) {
      ASSERT_TRUE(b.contains(k)) << where << '/' << k;
      expect_json_close(v, b[k], where + '/' + k);
    }
  } else if (a.is_array()) {
    ASSERT_EQ(a.size(), b.size()) << where;
    for (std::size_t i = 0; i < a.size(); ++i) {
      expect_json_close(a[i], b[i], where + '/' + std::to_string(i));
    }
  } else {
    EXPECT_EQ(a, b) << where;
  }
}

}  // namespace

TEST_F(Cli, EnumerateFifteen) {
  const CliRun r = run("enumerate 15");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("5 classes\n", 0), 0u);
}

TEST_F(Cli, EnumeratePowerOfTwo) {
  const CliRun r = run("enumerate 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0 classes (m is a power of two; see literature values)"), std::string::npos);
  EXPECT_NE(r.out.find("count from literature: 1"), std::string::npos);
}

TEST_F(Cli, EnumerateRawListsMembers) {
  const CliRun r = run("enumerate 9 --raw --json " + path("e9.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("2 classes\n", 0), 0u);
  // 8 solutions, each listed on an indented line.
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1 + 2 + 8);
  const json j = json::parse(slurp(path("e9.json")));
  EXPECT_EQ(j["raw_total"], 8);
  EXPECT_EQ(j["classes"][0]["members"].size(), 6u);
}

TEST_F(Cli, EnumerateBadM) {
  EXPECT_EQ(run("enumerate 2").code, 2);
  EXPECT_EQ(run("enumerate 31").code, 2);
  EXPECT_EQ(run("enumerate abc").code, 2);
}

TEST_F(Cli, Table) {
  const CliRun r = run("table --max-m 15 --csv " + path("t.csv"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n3, 1, 1.7320508, 1/3\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n12, 2, 1.6630706, 1/(24 sin(π/24))\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n15, 5, "), std::string::npos);
  EXPECT_NE(r.out.find("\n4, 0, -, -  (count from literature: 1)\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n8, 0, -, -  (count from literature: 1)\n"), std::string::npos);
  const std::string csv = slurp(path("t.csv"));
  EXPECT_NE(csv.find("\n12,2,1.66307062,0.319220732,1/(24 sin(π/24)),\n"), std::string::npos);
  EXPECT_EQ(run("table --max-m 2").code, 2);
}

TEST_F(Cli, PolygonTwelveSvg) {
  const CliRun r = run("polygon 12 --class 0 --svg " + path("p.svg"));
  EXPECT_EQ(r.code, 0);
  const std::string svg = slurp(path("p.svg"));
  EXPECT_NE(svg.find("viewBox=\"0 0 800 800\""), std::string::npos);
  std::smatch m;
  ASSERT_TRUE(std::regex_search(svg, m, std::regex("points=\"([^\"]*)\"")));
  const std::string pts = m[1];
  EXPECT_EQ(std::count(pts.begin(), pts.end(), ','), 12);
  std::size_t dashed = 0;
  for (std::size_t pos = 0; (pos = svg.find("class=\"diameter\"", pos)) != std::string::npos; ++pos) {
    ++dashed;
  }
  // A Reinhardt polygon has one diameter chord per vertex.
  EXPECT_EQ(dashed, 12u);
  EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
  // Six decimals on every coordinate.
  EXPECT_TRUE(std::regex_search(svg, std::regex("x1=\"-?[0-9]+\\.[0-9]{6}\"")));
}

TEST_F(Cli, PolygonFourIsOptimalQuadrilateral) {
  const CliRun r = run("polygon 4 --svg " + path("q.svg") + " --json " + path("q.json"));
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(slurp(path("q.json")));
  EXPECT_EQ(j["m"], 4);
  EXPECT_NEAR(j["r"].get<double>(), 0.329459311, 1e-9);
  EXPECT_TRUE(fs::exists(path("q.svg")));
}

TEST_F(Cli, PolygonErrors) {
  EXPECT_EQ(run("polygon 9 --class 2").code, 2);
  EXPECT_EQ(run("polygon 4 --class 1").code, 2);
  EXPECT_EQ(run("polygon 8").code, 2);
  EXPECT_EQ(run("frame 16").code, 2);
  EXPECT_EQ(run("frame 4 --pair " + path("p.json")).code, 2);
}

TEST_F(Cli, FrameThree) {
  const CliRun r = run("frame 3 --class 0 --svg " + path("f.svg"));
  EXPECT_EQ(r.code, 0);
  for (const char* deg : {"angle 30.0000000 deg", "angle 90.0000000 deg", "angle 150.0000000 deg"}) {
    EXPECT_NE(r.out.find(deg), std::string::npos) << deg;
  }
  const std::string svg = slurp(path("f.svg"));
  std::size_t arrows = 0;
  for (std::size_t pos = 0; (pos = svg.find("marker-end", pos)) != std::string::npos; ++pos) ++arrows;
  EXPECT_EQ(arrows, 3u);
}

TEST_F(Cli, Harmonic) {
  const CliRun r = run("harmonic 4");
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["beta"].get<double>(), 1.8477591, 5e-8);
  EXPECT_EQ(j["method"], "exact_tight");
}

TEST_F(Cli, BetaFromMatrix) {
  const CliRun r = run("beta --matrix \"" OPTIFRAME_DATA_DIR "/e4prime.csv\"");
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["beta"].get<double>(), 1.7122651, 5e-8);
}

TEST_F(Cli, BetaNumericRoute) {
  std::ofstream(path("m.csv")) << "# not tight\n1,0\n0,2\n1,1\n";
  const CliRun r = run("beta --matrix " + path("m.csv"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["method"], "numeric");
}

TEST_F(Cli, BetaParseFailures) {
  std::ofstream(path("bad.csv")) << "1,0\n1,x\n";
  EXPECT_EQ(run("beta --matrix " + path("bad.csv")).code, 2);
  EXPECT_EQ(run("beta --matrix " + path("missing.csv")).code, 2);
  EXPECT_EQ(run("beta").code, 2);
}

TEST_F(Cli, Verify) {
  const CliRun r = run("verify --suite table1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("PASS table1", 0), 0u);
  EXPECT_EQ(run("verify --suite nonsense").code, 2);
}

TEST_F(Cli, UnknownSubcommand) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, ByteIdenticalOutput) {
  for (const char* threads : {"1", "3"}) {
    const std::string env = std::string("OPTIFRAME_THREADS=") + threads;
    const std::string tag = threads;
    EXPECT_EQ(run("enumerate 18 --raw --json " + path("a" + tag + ".json"), env).code, 0);
    EXPECT_EQ(run("frame 15 --class 3 --json " + path("f" + tag + ".json") + " --svg " +
                  path("f" + tag + ".svg") + " --csv " + path("f" + tag + ".csv"), env)
                  .code,
              0);
    EXPECT_EQ(run("table --max-m 18 --csv " + path("t" + tag + ".csv"), env).code, 0);
    EXPECT_EQ(run("polygon 12 --class 1 --svg " + path("p" + tag + ".svg"), env).code, 0);
  }
  std::size_t compared = 0;
  for (const char* stem : {"a", "f", "t", "p"}) {
    for (const char* ext : {".json", ".svg", ".csv"}) {
      const std::string a = path(std::string(stem) + "1" + ext);
      const std::string b = path(std::string(stem) + "3" + ext);
      if (!fs::exists(a)) continue;
      EXPECT_EQ(slurp(a), slurp(b)) << stem << ext;
      ++compared;
    }
  }
  EXPECT_EQ(compared, 6u);
  EXPECT_EQ(run("harmonic 7").out, run("harmonic 7").out);
}

TEST_F(Cli, FixturesReproduce) {
  // Each fixture under data/ is regenerated and compared field by field.
  const fs::path data = OPTIFRAME_DATA_DIR;
  const std::vector<std::pair<std::string, std::string>> layouts{
      {"frames", "frame"}, {"polygons", "polygon"}, {"pairs", "frame"}};
  std::size_t checked = 0;
  for (const auto& [dir, command] : layouts) {
    const std::string flag = dir == "pairs" ? " --pair " : " --json ";
    for (const auto& entry : fs::directory_iterator(data / dir)) {
      const std::string stem = entry.path().stem().string();
      std::smatch m;
      std::string args;
      if (stem == "E4") {
        args = "harmonic 4";
      } else if (stem == "E4prime" || stem == "P4prime") {
        args = command + " 4";
      } else if (std::regex_match(stem, m, std::regex("[EP]([0-9]+)_([0-9]+)"))) {
        args = command + " " + m[1].str() + " --class " + m[2].str();
      } else {
        ADD_FAILURE() << "unexpected fixture " << entry.path();
        continue;
      }
      ASSERT_EQ(run(args + flag + path("x.json")).code, 0) << stem;
      expect_json_close(json::parse(slurp(path("x.json"))), json::parse(slurp(entry.path())),
                        dir + "/" + stem);
      ++checked;
    }
  }
  // 17 sign classes for 3 <= m <= 15, plus E_4 and E_4'.
  EXPECT_EQ(checked, 17u + 2u + 17u + 1u + 17u);

  const CliRun table = run("table --max-m 15 --csv " + path("t.csv"));
  ASSERT_EQ(table.code, 0);
  EXPECT_EQ(slurp(path("t.csv")), slurp(data / "table1.csv"));
  ASSERT_EQ(run("frame 4 --csv " + path("e.csv")).code, 0);
  std::ifstream a(path("e.csv"));
  std::ifstream b(data / "e4prime.csv");
  double x = 0.0;
  double y = 0.0;
  std::size_t rows = 0;
  while (a >> x) {
    ASSERT_TRUE(static_cast<bool>(b >> y));
    EXPECT_NEAR(x, y, 1e-15);
    a.ignore(1);
    b.ignore(1);
    ++rows;
  }
  EXPECT_EQ(rows, 8u);
}
