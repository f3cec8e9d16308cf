#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "molfan/cli.hpp"

namespace molfan {
namespace {

struct Result
{
  int code{0};
  std::string out;
  std::string err;
};

std::string fixture(const std::string & name) { return std::string(MOLFAN_FIXTURES) + "/" + name; }

Result run(std::vector<std::string> args)
{
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, ClassifyExample)
{
  const Result r = run({"classify", "--input", fixture("example.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("verdict: IdealVertex x3 = (80.000, 40.000)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("verified: yes"), std::string::npos);
  EXPECT_NE(r.out.find("classes: 10 (5 corner, 5 face)"), std::string::npos);
}

TEST(Cli, ClassifyConflictingJson)
{
  const Result r = run({"classify", "--input", fixture("example_conflict.json"), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["verdict"]["kind"], "NoIdeal");
  EXPECT_EQ(doc["groups"].size(), 2u);
  EXPECT_EQ(doc["objectives"][1]["argmax"]["point"], nlohmann::json::array({100.0, 0.0}));
  EXPECT_EQ(doc["tolerances"]["eps_geom"], 1e-9);
  EXPECT_EQ(doc["classes"].size(), 10u);
}

TEST(Cli, SensitivityByObjectiveAndVertex)
{
  const Result r = run({"sensitivity", "--input", fixture("example.json"), "--objective", "1", "--angle-unit", "deg"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("open interval (26.565, 63.435) deg"), std::string::npos) << r.out;

  const Result v = run({"sensitivity", "--input", fixture("example.json"), "--vertex", "3", "--angle-unit", "rad", "--precision", "5"});
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_NE(v.out.find("(0.46365, 1.10715) rad"), std::string::npos) << v.out;

  const Result j = run({"sensitivity", "--input", fixture("example.json"), "--vertex", "3", "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_NEAR(doc["interval"][0].get<double>(), 26.565051177, 1e-8);

  EXPECT_EQ(run({"sensitivity", "--input", fixture("example.json"), "--vertex", "6"}).code, 2);
  EXPECT_EQ(run({"sensitivity", "--input", fixture("example.json")}).code, 2);
  EXPECT_EQ(run({"sensitivity", "--input", fixture("example.json"), "--vertex", "1", "--objective", "1"}).code, 2);
}

TEST(Cli, SolveUsesBothSolvers)
{
  const Result r = run({"solve", "--input", fixture("example.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("enumeration: vertex x3 = (80.000, 40.000), value 280.000"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("simplex:     vertex (80.000, 40.000), value 280.000"), std::string::npos) << r.out;

  const Result f = run({"solve", "--input", fixture("free_box.json"), "--format", "json"});
  EXPECT_EQ(f.code, 0) << f.err;
  const auto doc = nlohmann::json::parse(f.out);
  EXPECT_EQ(doc["solutions"][0]["simplex"]["point"], nlohmann::json::array({-1.0, -1.0}));
}

TEST(Cli, FanAndPlot)
{
  const Result r = run({"fan", "--input", fixture("unit_square.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("[2] corner x3: cone (0.000, 90.000) deg"), std::string::npos) << r.out;

  const auto path = std::filesystem::temp_directory_path() / "molfan_cli_test.svg";
  const Result p = run({"plot", "--input", fixture("example_multi.json"), "--output", path.string()});
  EXPECT_EQ(p.code, 0) << p.err;
  std::ifstream in(path);
  std::stringstream svg;
  svg << in.rdbuf();
  EXPECT_NE(svg.str().find("</svg>"), std::string::npos);
  std::filesystem::remove(path);

  const Result s = run({"plot", "--input", fixture("no_objectives.json")});
  EXPECT_EQ(s.code, 0) << s.err;
  EXPECT_NE(s.out.find("</svg>"), std::string::npos);
}

TEST(Cli, ErrorContract)
{
  const Result empty = run({"solve", "--input", fixture("empty.json")});
  EXPECT_EQ(empty.code, 1);
  EXPECT_EQ(empty.err.rfind("E_EMPTY:", 0), 0u) << empty.err;

  const Result unbounded = run({"classify", "--input", fixture("unbounded.json")});
  EXPECT_EQ(unbounded.code, 1);
  EXPECT_EQ(unbounded.err.rfind("E_UNBOUNDED:", 0), 0u) << unbounded.err;

  const Result zero = run({"classify", "--input", fixture("zero_form.json")});
  EXPECT_EQ(zero.code, 1);
  EXPECT_EQ(zero.err.rfind("E_ZEROFORM:", 0), 0u) << zero.err;

  const Result schema = run({"classify", "--input", fixture("bad_shape.json")});
  EXPECT_EQ(schema.code, 2);
  EXPECT_EQ(schema.err.rfind("E_SCHEMA:", 0), 0u) << schema.err;

  const Result missing = run({"classify", "--input", fixture("does_not_exist.json")});
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(missing.err.rfind("E_PARSE:", 0), 0u) << missing.err;

  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"classify", "--input", fixture("example.json"), "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"classify", "--input", fixture("example.json"), "--eps-geom", "-1"}).code, 2);
  EXPECT_EQ(run({"classify", "--input", fixture("no_objectives.json")}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, RepeatedRunsAreByteIdentical)
{
  for (const auto & cmd : {"classify", "fan", "solve", "plot"}) {
    for (const auto & fmt : {"text", "json"}) {
      const std::vector<std::string> args = {cmd, "--input", fixture("example_multi.json"), "--format", fmt};
      const Result a = run(args);
      const Result b = run(args);
      EXPECT_EQ(a.code, 0) << a.err;
      EXPECT_EQ(a.out, b.out);
    }
  }
}

}  // namespace
}  // namespace molfan
