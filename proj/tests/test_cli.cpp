#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "tdroute/cli.hpp"
#include "tdroute/io.hpp"

namespace tdroute {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "tdroute");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

double value_after(const std::string& text, const std::string& key) {
  const auto pos = text.find(key);
  if (pos == std::string::npos) return -1.0;
  return std::stod(text.substr(pos + key.size()));
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tdroute_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const char* name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const std::string kEq = "1.0471975512";
const std::string kPi6 = "0.5235987755982988";
const std::string kPi5 = "0.6283185307179586";

TEST_F(Cli, CThetaEquilateral) {
  const Result r = run({"ctheta", "--theta1", "1.0471975511965976", "--theta2", "1.0471975511965976"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("C(theta1, theta2) 2.8867513459"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("1/sin(theta1/2) 2.0000000000"), std::string::npos) << r.out;
  const Result rounded = run({"ctheta", "--theta1", kEq, "--theta2", kEq});
  EXPECT_EQ(rounded.code, 0);
  EXPECT_NEAR(value_after(rounded.out, "C(theta1, theta2) "), 2.8867513459, 2e-10);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"ctheta", "--theta1", "0.5"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"ctheta", "--theta1", "x", "--theta2", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"adversarial", "sideways", "--theta1", kEq, "--theta2", kEq, "--out", "x"}).code,
            cli::kExitUsage);
  const Result help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("ctheta"), std::string::npos);
  const Result sub = run({"route", "--help"});
  EXPECT_EQ(sub.code, 0);
  EXPECT_NE(sub.out.find("--baseline"), std::string::npos);
}

TEST_F(Cli, ValidationErrors) {
  EXPECT_EQ(run({"ctheta", "--theta1", "1.0", "--theta2", "0.5"}).code, cli::kExitFailure);
  io::write_file(path("bad.txt"), "0 0\n1 0\n");
  const Result r = run({"build", "--points", path("bad.txt"), "--theta1", kEq, "--theta2", kEq,
                        "--out", path("g.json")});
  EXPECT_EQ(r.code, cli::kExitFailure);
  EXPECT_NE(r.err.find("general position"), std::string::npos) << r.err;
  io::write_file(path("junk.txt"), "0 0\nabc\n");
  const Result j = run({"build", "--points", path("junk.txt"), "--theta1", kEq, "--theta2", kEq,
                        "--out", path("g.json")});
  EXPECT_EQ(j.code, cli::kExitFailure);
  EXPECT_NE(j.err.find("line 2"), std::string::npos) << j.err;
  EXPECT_EQ(run({"span", "--graph", path("missing.json")}).code, cli::kExitFailure);
}

TEST_F(Cli, BuildPerturbRouteSpan) {
  io::write_file(path("pts.txt"), "0 0\n1 0\n0.4 0.7\n0.9 0.8\n0.2 0.3\n");
  const Result b = run({"build", "--points", path("pts.txt"), "--theta1", kPi6, "--theta2", kPi5,
                        "--perturb", "3", "1e-6", "--oracle", "--out", path("g.json")});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_NE(b.out.find("edge sets agree"), std::string::npos);
  const Result r = run({"route", "--graph", path("g.json"), "--from", "0", "--to", "3", "--svg",
                        path("r.svg")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("path: 0"), std::string::npos);
  EXPECT_TRUE(fs::exists(path("r.svg")));
  EXPECT_EQ(run({"route", "--graph", path("g.json"), "--from", "0", "--to", "9"}).code,
            cli::kExitFailure);
  const Result s = run({"span", "--graph", path("g.json")});
  ASSERT_EQ(s.code, 0);
  EXPECT_GE(value_after(s.out, "spanning ratio "), 1.0);
  const Result rr = run({"rratio", "--graph", path("g.json")});
  ASSERT_EQ(rr.code, 0) << rr.err;
  EXPECT_GE(value_after(rr.out, "routing ratio "), 1.0);
  const Result ren = run({"render", "--graph", path("g.json"), "--svg", path("g.svg"), "--route",
                          "0", "3", "--cones", "4", "--shade-negative", "--homothet", "0", "3"});
  ASSERT_EQ(ren.code, 0) << ren.err;
  EXPECT_NE(io::read_file(path("g.svg")).find("<svg"), std::string::npos);
}

TEST_F(Cli, AdversarialSpan) {
  const Result a = run({"adversarial", "span", "--theta1", kEq, "--theta2", kEq, "--eps", "1e-4",
                        "--out", path("a.json")});
  ASSERT_EQ(a.code, 0) << a.err;
  const Result s = run({"span", "--graph", path("a.json")});
  ASSERT_EQ(s.code, 0);
  EXPECT_GE(value_after(s.out, "spanning ratio "), 1.99);
  EXPECT_EQ(run({"adversarial", "span", "--theta1", kEq, "--theta2", kEq, "--eps", "0.3", "--out",
                 path("b.json")})
                .code,
            cli::kExitFailure);
}

TEST_F(Cli, AdversarialRouteBaselineWorse) {
  ASSERT_EQ(run({"adversarial", "route", "--theta1", kPi6, "--theta2", kPi5, "--k", "3", "--eps",
                 "1e-5", "--alpha", "1.0471975511965976", "--out", path("g1.json")})
                .code,
            0);
  const auto doc = io::parse_graph(io::read_file(path("g1.json")));
  ASSERT_TRUE(doc.metadata.start && doc.metadata.target);
  const std::string s = std::to_string(*doc.metadata.start);
  const std::string t = std::to_string(*doc.metadata.target);
  const Result opt = run({"route", "--graph", path("g1.json"), "--from", s, "--to", t});
  const Result base =
      run({"route", "--graph", path("g1.json"), "--from", s, "--to", t, "--baseline"});
  ASSERT_EQ(opt.code, 0) << opt.err;
  ASSERT_EQ(base.code, 0) << base.err;
  const double ro = value_after(opt.out, "\nratio ");
  const double rb = value_after(base.out, "\nratio ");
  EXPECT_GT(rb, 6.55);
  EXPECT_LT(ro, 6.52);
  ASSERT_EQ(run({"adversarial", "route", "--theta1", kPi6, "--theta2", kPi5, "--variant", "2",
                 "--out", path("g2.json")})
                .code,
            0);
  EXPECT_EQ(io::parse_graph(io::read_file(path("g2.json"))).points.size(), doc.points.size() + 1);
}

}  // namespace
}  // namespace tdroute
