#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "commands.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "wittlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = wittlab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, DoldExample) {
  auto r = cli({"dold", "1,3,4,7,11"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "PASS (ghost-realizable over Z up to n=5)\n");
  auto bad = cli({"dold", "1,2"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out, "FAIL (n=2 does not divide c_2 = 1)\n");
}

TEST(Cli, StructPolyExample) {
  auto r = cli({"struct-poly", "--kind", "add", "--flavor", "big", "--nest", "1,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1: X1 + Y1\n2: -X1*Y1 + X2 + Y2\n");
}

TEST(Cli, VerifyExample) {
  auto r = cli({"verify", "r-polys", "--max", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS r_1\n"), std::string::npos);
  EXPECT_TRUE(r.out.size() >= 29 && r.out.substr(r.out.size() - 29) == "OK: r_1..r_6 match reference\n") << r.out;
  EXPECT_EQ(cli({"verify", "no-such-suite"}).code, 2);
  EXPECT_EQ(cli({"verify", "diagram-19-14"}).code, 0);
}

TEST(Cli, WittPolynomialText) {
  EXPECT_EQ(cli({"witt-poly", "6"}).out, "X1^6 + 2*X2^3 + 3*X3^2 + 6*X6\n");
  EXPECT_EQ(cli({"witt-poly", "2"}).out, "X1^2 + 2*X2\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"bogus"}).code, 2);
  EXPECT_EQ(cli({"witt-poly"}).code, 2);
  EXPECT_EQ(cli({"witt-calc", "--op", "frobenius", "--a", "1,2"}).code, 2);
  auto r = cli({"unghost", "1,2"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("integrality failure"), std::string::npos);
  EXPECT_EQ(cli({"coords", "--from", "series", "--to", "necklace", "--ring", "ZZ_(2)", "1/3,0"}).code, 0);
  EXPECT_EQ(cli({"symm", "convert", "1/2*p(2)", "--to", "h"}).code, 3);
}

TEST(Cli, JsonModeEmitsSerializationFormats) {
  auto r = cli({"--json", "witt-calc", "--op", "add", "--a", "1,0", "--b", "1,0"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["coords"]["1"], "2");
  EXPECT_EQ(j["coords"]["2"], "-1");
  EXPECT_EQ(j["nest"], nlohmann::json::array({1, 2}));
  auto s = nlohmann::json::parse(cli({"symm", "convert", "s(2,1)", "--to", "m", "--json"}).out);
  EXPECT_EQ(s["basis"], "m");
  auto v = nlohmann::json::parse(cli({"--json", "verify", "klein4"}).out);
  EXPECT_TRUE(v["ok"].get<bool>());
}

TEST(Cli, ComputationsThroughTheFrontEnd) {
  EXPECT_EQ(cli({"teich", "--p", "5", "--k", "3", "--a", "2"}).out, "57\n");
  EXPECT_EQ(cli({"unghost", "1,3,4,7"}).out, "(1, 1, 1, 1)\n");
  EXPECT_EQ(cli({"coords", "--from", "witt", "--to", "series", "1,1,1"}).out, "1 + t + 2 t^2 + 3 t^3 + O(t^4)\n");
  EXPECT_EQ(cli({"symm", "mul", "h(2)", "e(1)", "--to", "s"}).out, "s(3) + s(2,1)\n");
  EXPECT_EQ(cli({"symm", "convert", "2*s(1,1) - e(2)", "--to", "e"}).out, "e(2)\n");
  EXPECT_EQ(cli({"symm", "inner", "s(2,1)", "h(2,1)"}).out, "1\n");
  EXPECT_EQ(cli({"qsymm", "shuffle", "1", "2"}).out, "[1,2] + [2,1] + [3]\n");
  EXPECT_EQ(cli({"necklace", "number", "--alpha", "2", "--n", "6", "--upto"}).out, "2, 1, 2, 3, 6, 9\n");
  EXPECT_EQ(cli({"burnside", "T", "1,1,1,1"}).out, "C1 + C2 + C3 + C4\n");
  EXPECT_EQ(cli({"lambda", "universal-formula", "--kind", "iterate", "--m", "2", "--n", "2"}).out,
            "lambda^1(x)*lambda^3(x) - lambda^4(x)\n");
}

TEST(Cli, OutputIsDeterministic) {
  std::vector<std::string> args{"--json", "struct-poly", "--kind", "mul", "--nest", "1,2,3,4"};
  EXPECT_EQ(cli(args).out, cli(args).out);
}
