#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "trinom/families.hpp"

using namespace trinom;

namespace {

std::vector<std::pair<unsigned, unsigned>> nk(const std::vector<ParamEntry>& entries) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (const auto& e : entries) out.emplace_back(e.n, e.params.k);
  return out;
}

}  // namespace

TEST(Families, ParseAndPrint) {
  for (FamilyId id : kAllFamilies) EXPECT_EQ(parse_family(to_string(id)), id);
  EXPECT_EQ(parse_family("f3"), FamilyId::F3);
  EXPECT_THROW((void)parse_family("F7"), Error);
  EXPECT_THROW((void)parse_family("G1"), Error);
}

TEST(Families, InstantiateF1) {
  const auto inst = instantiate(FamilyId::F1, {1, 0});
  EXPECT_EQ(inst.degree(), 3u);
  EXPECT_EQ(inst.exponents()[0], ExtExponent(5));
  EXPECT_EQ(inst.exponents()[1], ExtExponent(4));
  EXPECT_EQ(inst.exponents()[2], ExtExponent(1));
}

TEST(Families, ConditionViolatedQuotesHypothesis) {
  try {
    (void)instantiate(FamilyId::F1, {2, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ConditionViolated);
    EXPECT_NE(std::string(e.what()).find("k ≢ 2 (mod 3)"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("≡ 2 (mod 3)"), std::string::npos);
  }
  EXPECT_THROW((void)instantiate(FamilyId::F6, {2, 2}), Error);   // k even
  EXPECT_THROW((void)instantiate(FamilyId::F6, {9, 2}), Error);   // k > n-1
  EXPECT_THROW((void)instantiate(FamilyId::F6, {3, 3}), Error);   // gcd(m,k) = 3
  EXPECT_THROW((void)instantiate(FamilyId::F3, {0, 0}), Error);
  try {
    (void)instantiate(FamilyId::F6, {3, 3});
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("gcd(m, k) = 1"), std::string::npos);
  }
}

TEST(Families, DegreeMismatch) {
  try {
    (void)instantiate(FamilyId::F3, {1, 0}, FieldSpec::standard(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegreeMismatch);
  }
}

TEST(Families, InstantiateF6) {
  const auto inst = instantiate(FamilyId::F6, {3, 2});
  EXPECT_EQ(inst.degree(), 8u);
  EXPECT_EQ(inst.exponents()[0], ExtExponent(1 + 8 + 64 + 512 + 4096));
  EXPECT_EQ(inst.exponents()[0], ExtExponent(4681));
  EXPECT_EQ(inst.exponents()[1], ExtExponent(16));
  EXPECT_EQ(inst.reduced_exponents()[0], 4681u % 255u);
}

TEST(Families, ExponentsMatchFormulaText) {
  for (FamilyId id : kAllFamilies) {
    for (const auto& e : enumerate_params(id, 20)) {
      const auto ex = family_exponents(id, e.params);
      const unsigned k = e.params.k;
      BigInt t = 1;
      auto p2 = [&](unsigned j) { return BigInt(t << j); };
      BigInt e1, e2;
      switch (id) {
        case FamilyId::F1: e1 = p2(2 * k) + p2(k) - 1; e2 = p2(2 * k); break;
        case FamilyId::F2: e1 = p2(2 * k) + p2(k) - 1; e2 = p2(2 * k) - p2(k) + 1; break;
        case FamilyId::F3: e1 = p2(2 * k + 1) + p2(k + 1) + 1; e2 = p2(k + 1) + 1; break;
        case FamilyId::F4: e1 = p2(3 * k - 1) - p2(2 * k) + p2(k); e2 = p2(k) - 1; break;
        case FamilyId::F5: e1 = p2(2 * k) + p2(k) + 1; e2 = p2(2 * k) + 1; break;
        case FamilyId::F6:
          e1 = (p2((2 * e.params.m + 1) * k) - 1) / (p2(k) - 1);
          e2 = p2(2 * e.params.m);
          break;
      }
      EXPECT_EQ(ex[0].value(), e1);
      EXPECT_EQ(ex[1].value(), e2);
      EXPECT_EQ(ex[2].value(), 1);
      // e1 > e2 > e3 except F4 k=1, where 2^k - 1 = 1 = e3.
      EXPECT_GT(ex[0], ex[1]);
      if (!(id == FamilyId::F4 && k == 1)) EXPECT_GT(ex[1], ex[2]);
    }
  }
}

TEST(Families, EvaluateWorkedExample) {
  const auto inst = instantiate(FamilyId::F1, {1, 0});
  const Bits expect = oracle::naive_poly_eval({5, 4, 1}, 0b101, inst.field().modulus());
  EXPECT_EQ(expect, 0b010u);
  EXPECT_EQ(evaluate(inst, 0b101u), 0b010u);
  EXPECT_EQ(evaluate(inst, inst.field().element(0b101)).bits(), 0b010u);
}

TEST(Families, EnumerateParams) {
  EXPECT_EQ(nk(enumerate_params(FamilyId::F1, 12)),
            (std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {9, 3}, {12, 4}}));
  EXPECT_EQ(nk(enumerate_params(FamilyId::F4, 8)),
            (std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {5, 2}, {8, 3}}));
  const auto f6 = enumerate_params(FamilyId::F6, 8);
  std::vector<std::tuple<unsigned, unsigned, unsigned>> got;
  for (const auto& e : f6) got.emplace_back(e.n, e.params.m, e.params.k);
  EXPECT_EQ(got, (std::vector<std::tuple<unsigned, unsigned, unsigned>>{
                     {4, 1, 1}, {4, 1, 3}, {8, 2, 1}, {8, 2, 3}, {8, 2, 5}, {8, 2, 7}}));
  // n = 6 admits no family.
  for (FamilyId id : kAllFamilies) {
    for (const auto& e : enumerate_params(id, 32)) EXPECT_NE(e.n, 6u);
  }
}

TEST(Families, GcdIdentityExamples) {
  const auto f1 = check_gcd_identities(FamilyId::F1, {1, 0});
  ASSERT_FALSE(f1.empty());
  EXPECT_EQ(f1[0].name, "gcd(2^(2k+1)-4, 2^(3k)-1) = 1");
  EXPECT_EQ(oracle::euclid(4, 7), 1u);
  EXPECT_TRUE(f1[0].holds);

  EXPECT_EQ(oracle::euclid(4681, 255), 1u);
  for (const auto& row : check_gcd_identities(FamilyId::F6, {3, 2})) EXPECT_TRUE(row.holds) << row.name;

  EXPECT_EQ(oracle::euclid(73, 11), 1u);
  const auto f2 = check_gcd_identities(FamilyId::F2, {3, 0});
  EXPECT_EQ(f2[0].name, "gcd(2^(2k)+2^k+1, 2^k+3) = 1");
  EXPECT_TRUE(f2[0].holds);
}

TEST(Families, GcdIdentitiesFailOutsideHypotheses) {
  // k = 2 is excluded for F1: gcd(2^5 - 4, 2^6 - 1) = gcd(28, 63) = 7.
  EXPECT_EQ(oracle::euclid(28, 63), 7u);
  EXPECT_FALSE(check_gcd_identities(FamilyId::F1, {2, 0})[0].holds);
  // F6 with gcd(m, k) = 3: m = 3, k = 3.
  bool any_false = false;
  for (const auto& row : check_gcd_identities(FamilyId::F6, {3, 3})) any_false |= !row.holds;
  EXPECT_TRUE(any_false);
}

TEST(Families, UncheckedInstantiation) {
  const auto inst = instantiate_unchecked(FamilyId::F1, {2, 0});
  EXPECT_TRUE(inst.forced());
  EXPECT_EQ(inst.degree(), 6u);
  EXPECT_FALSE(instantiate_unchecked(FamilyId::F1, {3, 0}).forced());
  EXPECT_THROW((void)instantiate_unchecked(FamilyId::F1, {0, 0}), Error);
}

// ---- properties ----

TEST(FamiliesProperties, AnchorValues) {
  for (FamilyId id : kAllFamilies) {
    for (const auto& e : enumerate_params(id, 20)) {
      const auto inst = instantiate(id, e.params);
      EXPECT_EQ(inst(0), 0u);
      if (id == FamilyId::F3 || id == FamilyId::F4 || id == FamilyId::F5) EXPECT_EQ(inst(1), 1u);
    }
  }
}

TEST(FamiliesProperties, ExponentReductionIsSound) {
  for (FamilyId id : kAllFamilies) {
    for (const auto& e : enumerate_params(id, 12)) {
      const auto inst = instantiate(id, e.params);
      const FieldSpec& F = inst.field();
      const std::uint64_t r = inst.exponents()[0].mod(F.group_order());
      for (Bits x = 1; x < F.size(); ++x) {
        ASSERT_EQ(F.pow(x, inst.exponents()[0]), F.pow(x, r));
      }
    }
  }
}

TEST(FamiliesProperties, EvaluateMatchesNaiveOracle) {
  for (FamilyId id : kAllFamilies) {
    for (const auto& e : enumerate_params(id, 9)) {
      const auto inst = instantiate(id, e.params);
      std::vector<std::uint64_t> exps;
      for (auto r : inst.reduced_exponents()) exps.push_back(r);
      for (Bits x = 0; x < inst.field().size(); ++x) {
        ASSERT_EQ(inst(x), oracle::naive_poly_eval(exps, x, inst.field().modulus()));
      }
    }
  }
}

TEST(FamiliesProperties, GcdIdentitiesHoldUpTo32) {
  for (FamilyId id : kAllFamilies) {
    for (const auto& e : enumerate_params(id, 32)) {
      for (const auto& row : check_gcd_identities(id, e.params)) {
        EXPECT_TRUE(row.holds) << to_string(id) << " k=" << e.params.k << " m=" << e.params.m
                               << " " << row.name;
      }
    }
  }
}

TEST(FamiliesProperties, EnumeratedParamsInstantiate) {
  for (FamilyId id : kAllFamilies) {
    for (const auto& e : enumerate_params(id, 32)) {
      EXPECT_FALSE(violated_hypothesis(id, e.params).has_value());
      EXPECT_EQ(family_degree(id, e.params), e.n);
      EXPECT_NO_THROW((void)instantiate(id, e.params));
    }
  }
}
