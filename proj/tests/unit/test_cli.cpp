#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "rrkit/expr.hpp"
#include "rrkit/riemann_roch_p1.hpp"
#include "rrkit/superelliptic.hpp"

using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rrkit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, GenusSuperJson) {
  const auto r = run({"--json", "genus", "super", "w^4 = z^4 - 1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["method"], "superelliptic");
  EXPECT_EQ(j["genus"], 3);
  EXPECT_EQ(j["profile"]["V"], 12);
  EXPECT_EQ(j["profile"]["m"], 4);
}

TEST(Cli, NewtonIsNeverCalledGenus) {
  const auto r = run({"--json", "genus", "newton", "w^3 + z^6 + 1"});
  ASSERT_EQ(r.code, 0);
  const Json j = r.json();
  EXPECT_FALSE(j.contains("genus"));
  EXPECT_EQ(j["bound"], 4);
  EXPECT_EQ(j["method"], "newton-bound");
  EXPECT_FALSE(j["warnings"].empty());
  const auto text = run({"genus", "newton", "w^3 + z^6 + 1"});
  EXPECT_EQ(text.out.rfind("bound 4", 0), 0u);
}

TEST(Cli, BranchingAndRh) {
  auto r = run({"--json", "genus", "branching", "w^2 - z^5 + 1", "--v-inf", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["genus"], 2);
  r = run({"--json", "rh", "--sheets", "2", "--base-genus", "1", "--total-v", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["genus"], 3);
  r = run({"--json", "rh", "--sheets", "3", "--base-genus", "0", "--ramification", "2,2,1,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["genus"], 1);
  EXPECT_EQ(run({"rh", "--sheets", "2", "--base-genus", "0"}).code, 2);
  EXPECT_EQ(run({"rh", "--sheets", "2", "--base-genus", "0", "--total-v", "3"}).code, 1);
  EXPECT_EQ(run({"rh", "--sheets", "2", "--base-genus", "0", "--total-v", "2", "--ramification", "1,1"}).code, 2);
}

TEST(Cli, Kowalewski) {
  auto r = run({"--json", "kowalewski", "--a", "1", "--b", "1", "--c", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["genus"], 3);
  r = run({"--json", "kowalewski", "--a", "2", "--b", "1", "--c", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.json()["error"]["kind"], "domain");
  EXPECT_EQ(run({"kowalewski", "--a", "x", "--b", "1", "--c", "1"}).code, 2);
}

TEST(Cli, RrCheckAndLspace) {
  auto r = run({"--json", "rr-check", "3*(z)"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["lhs"], 4);
  EXPECT_EQ(r.json()["rhs"], 4);
  EXPECT_EQ(r.json()["ok"], true);
  EXPECT_EQ(run({"rr-check", "3*(z)"}).out.rfind("lhs 4, rhs 4, ok", 0), 0u);
  r = run({"--json", "lspace", "2*(z) - inf"});
  ASSERT_EQ(r.code, 0);
  const auto lib = rrkit::lspace_basis_p1(rrkit::parse_divisor("2*(z) - inf"));
  ASSERT_EQ(r.json()["dimension"], lib.dimension());
  for (std::size_t i = 0; i < lib.dimension(); ++i) EXPECT_EQ(r.json()["basis"][i], lib.basis[i].to_string());
}

TEST(Cli, Divisors) {
  auto r = run({"--json", "divisor", "principal", "(z^2-1)/z^3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["degree"], 0);
  EXPECT_EQ(r.json()["terms"].size(), 4u);
  r = run({"--json", "divisor", "eval", "2*(z) + (z^2+1) - (z) - 3*inf"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["degree"], 0);
  EXPECT_EQ(run({"divisor", "eval", "(z^2-1)"}).code, 1);
  EXPECT_EQ(run({"divisor", "eval", "(z^2-1"}).code, 2);
}

TEST(Cli, HyperellipticAndResidues) {
  auto r = run({"--json", "hyperelliptic", "w^2 = z*(z-1)*(z-2)*(z-3)*(z-4)"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["genus"], 2);
  EXPECT_EQ(j["canonical_degree"], 2);
  EXPECT_EQ(j["gaps_at_infinity"], Json::array({1, 3}));
  int total = 0;
  for (const auto& e : j["wronskian_orders"]) total += e["order"].get<int>();
  EXPECT_EQ(total, 6);
  r = run({"--json", "residues", "1/(z^2-1)"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["sum"], "0");
  EXPECT_EQ(run({"residues", "1/(z^2+1)"}).code, 1);
}

TEST(Cli, ParseErrorsExitTwo) {
  auto r = run({"--json", "genus", "newton", "w^^2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.json()["error"]["offset"], 2);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({"genus", "super", "w^2 = x"}).code, 2);
  EXPECT_EQ(run({"genus"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"genus", "branching", "w^2 - z^3"}).code, 2);
  EXPECT_EQ(run({"genus", "super", "w^2 = (z-1)^2"}).code, 1);
}

TEST(Cli, QuietPrintsOneLine) {
  const auto r = run({"--quiet", "genus", "super", "w^4 = z^4 - 1"});
  EXPECT_EQ(r.out, "genus 3\n");
}

TEST(Cli, BatchPreservesOrder) {
  const std::string path = ::testing::TempDir() + "rrkit_batch.txt";
  {
    std::ofstream f(path);
    for (int n = 2; n <= 9; ++n) {
      f << "genus super \"w^" << n << " = 1 - z^" << n << "\"\n";
    }
    f << "# comment\n\n";
    f << "genus newton \"w^^2\"\n";
  }
  const auto r = run({"--json", "--batch", path});
  EXPECT_EQ(r.code, 2);
  std::istringstream lines(r.out);
  std::string line;
  for (int n = 2; n <= 9; ++n) {
    ASSERT_TRUE(std::getline(lines, line));
    EXPECT_EQ(Json::parse(line)["genus"], (n - 1) * (n - 2) / 2);
  }
  ASSERT_TRUE(std::getline(lines, line));
  EXPECT_TRUE(Json::parse(line).contains("error"));
  std::remove(path.c_str());
}
