#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "latgeom");
  std::ostringstream out, err;
  int code = latgeom::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) { return std::string(LATGEOM_TEST_TMP) + "/" + name; }

std::string write(const std::string& name, const std::string& text) {
  std::string path = tmp(name);
  std::ofstream(path) << text;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string hurkens_file() {
  Result r = run({"construct", "hurkens", "-o", tmp("hurkens.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  return tmp("hurkens.json");
}

}  // namespace

TEST(Cli, WidthOfHurkens) {
  Result r = run({"width", hurkens_file()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("w = 1 + (2/3)√3 ≈ 2.1547005"), std::string::npos) << r.out;
}

TEST(Cli, ClassifyType1) {
  std::string path = write("square2.json", R"({"vertices": [[0, 0], [2, 0], [0, 2]]})");
  Result r = run({"classify", path});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "Type1Triangle");
  EXPECT_NE(r.out.find("1/3 1/3 1/3"), std::string::npos) << r.out;
}

TEST(Cli, PlotWritesSvg) {
  std::string svg_path = tmp("fig.svg");
  std::filesystem::remove(svg_path);
  Result r = run({"plot", hurkens_file(), "-o", svg_path});
  EXPECT_EQ(r.code, 0) << r.err;
  std::string svg = slurp(svg_path);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("<polygon"), std::string::npos);
  EXPECT_NE(svg.find("lattice-point"), std::string::npos);
}

TEST(Cli, AreaAndMu) {
  std::string diamond = write("diamond.json", R"({"vertices": [[1, 0], [0, 1], [-1, 0], [0, -1]]})");
  Result a = run({"area", diamond});
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("A = 2 ≈ 2"), std::string::npos) << a.out;
  Result m = run({"mu", diamond, "--eps", "1/100"});
  EXPECT_EQ(m.code, 0) << m.err;
  EXPECT_NE(m.out.find("mu1 = 1/2"), std::string::npos) << m.out;
  EXPECT_NE(m.out.find("mu2 in ["), std::string::npos);
  Result bad = run({"mu", hurkens_file()});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("NotSymmetric"), std::string::npos) << bad.err;
}

TEST(Cli, ConstructAndVerify) {
  Result c = run({"construct", "SymMaxCross", "--w", "3/2", "-o", tmp("cross.json")});
  ASSERT_EQ(c.code, 0) << c.err;
  Result v = run({"verify", tmp("cross.json")});
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_NE(v.out.find("sym_area_upper: ok"), std::string::npos) << v.out;
  EXPECT_NE(v.out.find("certified CrossingDiagonals"), std::string::npos) << v.out;
  Result j = run({"verify", tmp("cross.json"), "--json"});
  EXPECT_EQ(j.code, 0);
  auto report = nlohmann::json::parse(j.out);
  EXPECT_TRUE(report["all_satisfied"].get<bool>());
  Result max = run({"construct", "GeneralMaxTriangle", "--w", "max"});
  EXPECT_EQ(max.code, 0) << max.err;
  EXPECT_EQ(nlohmann::json::parse(max.out), nlohmann::json::parse(slurp(hurkens_file())));
}

TEST(Cli, ConstructOutOfRange) {
  Result r = run({"construct", "GeneralMin", "--w", "21/10"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("ParamOutOfRange"), std::string::npos) << r.err;
}

TEST(Cli, TriWidth) {
  Result r = run({"tri-width", "--params", "3/5", "3/5", "3/5"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("tri-width (parameters) = 15/7"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("lattice width = 15/7"), std::string::npos) << r.out;
  std::string params = write("params.json", R"({"x": ["1/2", "1/2", "1/2"]})");
  Result f = run({"tri-width", params});
  EXPECT_EQ(f.code, 0) << f.err;
  EXPECT_NE(f.out.find("area = 2 "), std::string::npos) << f.out;
  Result shifted = run({"tri-width", params, "--base", "1,0,2,0,1,1"});
  EXPECT_EQ(shifted.code, 0) << shifted.err;
  EXPECT_NE(shifted.out.find("area = 2 "), std::string::npos) << shifted.out;
  EXPECT_NE(shifted.out.find("[\"2\",\"1\"]"), std::string::npos) << shifted.out;
  Result both = run({"tri-width", params, "--params", "1/2", "1/2", "1/2"});
  EXPECT_EQ(both.code, 1);
  EXPECT_NE(both.err.find("InvalidInput"), std::string::npos) << both.err;
  Result root = run({"tri-width", "--params", "1/3*sqrt(3)", "1/3*sqrt(3)", "1/3*sqrt(3)"});
  EXPECT_NE(root.out.find("lattice width = 1 + (2/3)√3"), std::string::npos) << root.out;
}

TEST(Cli, FuzzExitsZeroWithoutViolations) {
  Result r = run({"fuzz", "--seeds", "30", "--profile", "symmetric"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("0 violations"), std::string::npos) << r.out;
  EXPECT_EQ(run({"fuzz", "--seeds", "30", "--profile", "symmetric"}).out, r.out);
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"width"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  Result missing = run({"width", tmp("does-not-exist.json")});
  EXPECT_EQ(missing.code, 1);
  EXPECT_NE(missing.err.find("InvalidInput"), std::string::npos);
  std::string flat = write("flat.json", R"({"vertices": [[0, 0], [1, 1], [2, 2]]})");
  Result degenerate = run({"area", flat});
  EXPECT_EQ(degenerate.code, 1);
  EXPECT_NE(degenerate.err.find("Degenerate"), std::string::npos);
}

TEST(Cli, PolygonFilesRoundTrip) {
  std::string path = write("round.json", R"({"vertices": [["-1/3", "0"], ["5/2", "1/7"], ["0", "4"]]})");
  Result first = run({"construct", "SymMin", "--w", "3/2", "--alpha", "1/4", "-o", tmp("symmin.json")});
  ASSERT_EQ(first.code, 0) << first.err;
  for (const std::string& file : {path, tmp("symmin.json"), hurkens_file()}) {
    Result a = run({"verify", file, "--json"});
    Result b = run({"verify", file, "--json"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, 0) << file << a.err;
  }
}
