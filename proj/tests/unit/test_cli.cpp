#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <sstream>

#include "commands.hpp"
#include "search.hpp"

using trinom::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

TEST(Cli, VerifyF1K3) {
  const auto r = cli({"verify", "--family", "F1", "--k", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = parse(r.out);
  EXPECT_EQ(j["instance"]["n"], 9);
  EXPECT_EQ(j["report"]["is_permutation"], true);
}

TEST(Cli, VerifyRejectsExcludedParameter) {
  const auto r = cli({"verify", "--family", "F1", "--k", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("k ≢ 2 (mod 3)"), std::string::npos) << r.err;
}

TEST(Cli, ForcedParametersAreDataOnly) {
  const auto r = cli({"verify", "--family", "F1", "--k", "2", "--force-params"});
  EXPECT_EQ(r.code, 0);
  const auto j = parse(r.out);
  EXPECT_EQ(j["instance"]["forced"], true);
  EXPECT_EQ(j["report"]["is_permutation"], false);
  EXPECT_TRUE(j["report"].contains("witness"));
}

TEST(Cli, VerifyModulusIndependence) {
  const auto a = parse(cli({"verify", "--family", "F6", "--m", "2", "--k", "3", "--modulus", "0x11D"}).out);
  const auto b = parse(cli({"verify", "--family", "F6", "--m", "2", "--k", "3"}).out);
  EXPECT_EQ(a["instance"]["modulus"], "0x11d");
  EXPECT_EQ(b["instance"]["modulus"], "0x11b");
  EXPECT_EQ(a["report"]["is_permutation"], b["report"]["is_permutation"]);
  // Implicit top bit.
  const auto c = parse(cli({"verify", "--family", "F6", "--m", "2", "--k", "3", "--modulus", "0x1D"}).out);
  EXPECT_EQ(c["instance"]["modulus"], "0x11d");
  EXPECT_EQ(cli({"verify", "--family", "F6", "--m", "2", "--k", "3", "--modulus", "0x101"}).code, 2);
}

TEST(Cli, VerifyBudget) {
  const auto r = cli({"verify", "--family", "F6", "--m", "8", "--k", "1"});
  EXPECT_EQ(r.code, 3);
}

TEST(Cli, VerifyIsByteStableAcrossThreads) {
  const auto one = cli({"verify", "--family", "F3", "--k", "4", "--threads", "1"});
  const auto many = cli({"verify", "--family", "F3", "--k", "4", "--threads", "8"});
  EXPECT_EQ(one.out, many.out);
}

TEST(Cli, Invert) {
  EXPECT_EQ(cli({"invert", "--family", "F1", "--k", "1", "--a", "0x2"}).out, "0x5\n");
  EXPECT_EQ(cli({"invert", "--family", "F3", "--k", "1", "--a", "0x1"}).out, "0x1\n");
  EXPECT_EQ(cli({"invert", "--family", "F5", "--k", "2", "--a", "0x0"}).out, "0x0\n");
  EXPECT_EQ(cli({"invert", "--family", "F1", "--k", "1", "--a", "0x8"}).code, 2);
  EXPECT_EQ(cli({"invert", "--family", "F1", "--k", "1", "--a", "zz"}).code, 2);
}

TEST(Cli, InvertTrace) {
  const auto r = cli({"invert", "--family", "F1", "--k", "1", "--a", "0x2", "--trace", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r.out);
  EXPECT_EQ(j["x"], "0x5");
  EXPECT_EQ(j["trace"]["b"], "0x4");
  EXPECT_EQ(j["trace"]["c"], "0x6");
  EXPECT_EQ(j["trace"]["epsilon"], "0x0");
}

TEST(Cli, MissingParameters) {
  EXPECT_EQ(cli({"verify", "--family", "F6", "--k", "1"}).code, 2);
  EXPECT_EQ(cli({"verify", "--family", "F3"}).code, 2);
  EXPECT_EQ(cli({"verify", "--family", "F3", "--k", "1", "--m", "1"}).code, 2);
  EXPECT_EQ(cli({"verify", "--family", "F9", "--k", "1"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, GcdSuite) {
  const auto r = cli({"gcd-suite", "--n-max", "32"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("\tfalse"), std::string::npos);
  EXPECT_NE(r.out.find("F1\t4\t-\t12\tgcd(2^(2k+1)-4, 2^(3k)-1) = 1\ttrue"), std::string::npos);
  EXPECT_NE(r.out.find("F6\t11\t3\t12\tgcd(d, 2^n-1) = 1\ttrue"), std::string::npos);
  EXPECT_EQ(cli({"gcd-suite", "--n-max", "65"}).code, 2);
  const auto j = parse(cli({"gcd-suite", "--n-max", "12", "--json"}).out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j[0]["family"], "F1");
  EXPECT_EQ(cli({"gcd-suite", "--n-max", "64"}).code, 0);
}

TEST(Cli, Families) {
  const auto r = cli({"families", "--n-max", "8", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r.out);
  ASSERT_EQ(j.size(), 6u);
  EXPECT_EQ(j[5]["id"], "F6");
  EXPECT_EQ(j[5]["params"].size(), 6u);
  EXPECT_EQ(cli({"families"}).code, 0);
}

TEST(Cli, Bench) {
  const auto r = cli({"bench", "--family", "F4", "--k", "2", "--reps", "1"});
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r.out);
  EXPECT_TRUE(j.contains("verify_ns"));
  EXPECT_TRUE(j.contains("invert_ns_per_op"));
  EXPECT_EQ(cli({"bench", "--family", "F4", "--k", "2", "--reps", "0"}).code, 2);
}

TEST(Cli, SearchSmall) {
  const auto a = cli({"search", "--n", "5", "--seed", "3"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out.rfind("# trinom search n=5 samples=64 seed=3\ne1,e2,e3,is_permutation,family,k,m\n", 0), 0u);
  EXPECT_EQ(a.out.find('\r'), std::string::npos);
  EXPECT_EQ(cli({"search", "--n", "5", "--seed", "3", "--threads", "4"}).out, a.out);
  // F4 k=2 and F5 k=2 live at n = 5.
  EXPECT_NE(a.out.find(",true,F4,2,\n"), std::string::npos);
  EXPECT_NE(a.out.find(",true,F5,2,\n"), std::string::npos);
  EXPECT_EQ(cli({"search", "--n", "6"}).out.find(",F"), std::string::npos);
  EXPECT_EQ(cli({"search", "--n", "15"}).code, 3);
}

TEST(CliProperties, FamilyMatchesReinstantiate) {
  using namespace trinom;
  for (unsigned n : {4u, 5u, 7u}) {
    for (const auto& rec : cli::search({.n = n})) {
      ASSERT_GT(rec.e1, rec.e2);
      ASSERT_GT(rec.e2, rec.e3);
      ASSERT_GE(rec.e3, 1u);
      if (!rec.family_match) continue;
      const auto inst = instantiate(rec.family_match->id, rec.family_match->params);
      EXPECT_EQ(cli::canonical_triple(inst), (std::array<std::uint64_t, 3>{rec.e1, rec.e2, rec.e3}));
      EXPECT_TRUE(rec.is_permutation);
    }
  }
}
