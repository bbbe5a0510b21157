#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(DELTACODES_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  Run r{-1, ""};
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, FactorSevenThree) {
  auto r = run("factor -n 7 -q 3 --paper-fields");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r.out, "m_0 = X + 2 "));
  EXPECT_TRUE(has(r.out, "m_1 = X^6 + X^5 + X^4 + X^3 + X^2 + X + 1 "));
  EXPECT_TRUE(has(r.out, "X^3 + w*X^2 + w^7*X + 2 "));
  EXPECT_TRUE(has(r.out, "X^3 + w^3*X^2 + w^5*X + 2 "));
}

TEST(Cli, Cosets) {
  auto r = run("cosets -n 7 -q 9");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{0}, {1,2,4}, {3,5,6}\n");
}

TEST(Cli, Counts) {
  EXPECT_EQ(run("count -n 7 -q 3 --mode so").out, "58\n");
  EXPECT_EQ(run("count -n 7 -q 3 --mode sd").out, "28\n");
  EXPECT_EQ(run("count -n 7 -q 3 --mode so --complete").out, "87\n");
  EXPECT_EQ(run("count -n 3 -q 2 --mode sd").out, "3\n");
  auto j = nlohmann::json::parse(run("count -n 7 -q 3 --format json").out);
  EXPECT_EQ(j["stated"], "58");
  EXPECT_EQ(j["complete"], "87");
}

TEST(Cli, ErrorsNameTheHypothesis) {
  auto r = run("count -n 6 -q 3");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r.out, "gcd(n,q)=1 required"));
  r = run("enumerate -n 7 -q 3 -t 4");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r.out, "t=2"));
  r = run("atlas -n 7 -q 3 -t 3");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r.out, "t must be even"));
  r = run("atlas -n 7 -q 6");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r.out, "prime power"));
  r = run("form -n 3 -q 2 -a 1,1 -b 1,1,1");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r.out, "LengthMismatch"));
  EXPECT_EQ(run("count -q 3").code, 2);
}

TEST(Cli, AtlasJson) {
  auto r = run("atlas -n 7 -q 3 --paper-fields --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["eta_prime"], "w^104");
  EXPECT_EQ(j["cosets"][1]["e"][0], "0,w^7,w^7,w^5,w^7,w^5,w^5");
  EXPECT_EQ(j["cosets"][1]["orientation"], "swaps");
  EXPECT_EQ(j["cosets"][0]["rho"][0], "w,w,w,w,w,w,w");
  EXPECT_EQ(j["fields"]["F_qt"], "3^2/2,2,1");
}

TEST(Cli, FormAndDual) {
  auto r = run("form -n 7 -q 3 --paper-fields -a 0,w^7,w^7,w^5,w^7,w^5,w^5 -b 0,w^7,w^7,w^5,w^7,w^5,w^5");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out, "(a,b) = 0\n[a,b] = 0\n");
  r = run("dual -n 7 -q 3 --paper-fields --cyclic --vector 0,w^7,w^7,w^5,w^7,w^5,w^5 --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["k_fq"], 8);
  EXPECT_EQ(j["cyclic"], true);
}

TEST(Cli, MinDistance) {
  auto r = run("mindist -n 7 -q 3 --paper-fields --cyclic --vector 0,w^7,w^7,w^5,w^7,w^5,w^5");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out, "(7, (3^2)^3, 5) exact over 728 nonzero words\n");
  r = run("mindist -n 7 -q 3 --paper-fields --cyclic --vector 0,w^7,w^7,w^5,w^7,w^5,w^5 --mindist-budget 10 --samples 5000");
  EXPECT_TRUE(has(r.out, "upper bound from 5000 sampled words"));
}

TEST(Cli, EnumerateJsonAndDeterminism) {
  auto a = run("enumerate -n 7 -q 3 --paper-fields --mode sd --format json --threads 1");
  auto b = run("enumerate -n 7 -q 3 --paper-fields --mode sd --format json --threads 3");
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  ASSERT_EQ(j.size(), 28u);
  for (auto& rec : j) {
    EXPECT_EQ(rec["self_dual"], true);
    EXPECT_EQ(rec["k_fq"], 7);
    EXPECT_TRUE(rec.contains("profile"));
  }
  auto lim = nlohmann::json::parse(run("enumerate -n 7 -q 3 --mode so --format json --limit 4").out);
  EXPECT_EQ(lim.size(), 4u);
}

TEST(Cli, GoodCodes) {
  auto r = run("goodcodes -n 11 -q 2");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r.out, "(11, (2^2)^5, 6) exact"));
  r = run("goodcodes -n 7 -q 3 --paper-fields");
  EXPECT_TRUE(has(r.out, "(7, (3^2)^3, 5) exact"));
}

TEST(Cli, VerifyCorruptedModulus) {
  // X^2 + X + 2 is the other primitive quadratic over F_3; the F_9 factors then print differently.
  auto r = run("verify-paper --budget small --f9-modulus 2,1,1");
  EXPECT_NE(r.code, 0);
  EXPECT_TRUE(has(r.out, "criterion 1 FAIL"));
  EXPECT_TRUE(has(r.out, "criterion 2 PASS"));
}

TEST(Cli, VerifySmallBudget) {
  auto r = run("verify-paper --budget small");
  EXPECT_TRUE(has(r.out, "criterion 1 PASS"));
  EXPECT_TRUE(has(r.out, "criterion 4 PASS"));
  EXPECT_TRUE(has(r.out, "criterion 5 PASS"));
  EXPECT_TRUE(has(r.out, "criterion 6 SKIPPED"));
  EXPECT_TRUE(has(r.out, "SKIPPED(bound-only)"));
  EXPECT_TRUE(has(r.out, "criterion 8 PASS"));
}
