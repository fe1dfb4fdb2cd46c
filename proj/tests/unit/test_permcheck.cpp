#include <gtest/gtest.h>

#include <random>

#include "trinom/families.hpp"
#include "trinom/inverter.hpp"
#include "trinom/permcheck.hpp"

using namespace trinom;

namespace {

auto identity = [](Bits x) { return x; };

struct RandomPolyMap {
  const FieldSpec* field;
  std::vector<std::pair<Bits, std::uint64_t>> terms;  // (coeff, exponent)
  Bits operator()(Bits x) const {
    Bits acc = 0;
    for (auto [c, e] : terms) acc ^= field->mul(c, field->pow(x, e));
    return acc;
  }
};

}  // namespace

TEST(Permcheck, Identity) {
  auto F = FieldSpec::make(3, 0b1011);
  const auto r = check(identity, *F);
  EXPECT_TRUE(r.is_permutation);
  EXPECT_EQ(r.domain_size, 8u);
  EXPECT_EQ(r.missing_count, 0u);
  EXPECT_EQ(r.fixed_point_count, 8u);
  EXPECT_FALSE(r.collision_witness);
  ASSERT_TRUE(r.cycle_type);
  EXPECT_EQ(*r.cycle_type, (CycleType{{1, 8}}));
}

TEST(Permcheck, ArtinSchreierCollides) {
  auto F = FieldSpec::make(3, 0b1011);
  auto as = [&](Bits x) { return F->square(x) ^ x; };
  const auto r = check(as, *F);
  EXPECT_FALSE(r.is_permutation);
  ASSERT_TRUE(r.collision_witness);
  EXPECT_EQ(*r.collision_witness, (CollisionWitness{0, 1}));
  EXPECT_EQ(r.missing_count, 4u);
  EXPECT_FALSE(r.cycle_type);
}

TEST(Permcheck, FamilyF1K1) {
  const auto inst = instantiate(FamilyId::F1, {1, 0});
  const auto r = check(inst, inst.field());
  EXPECT_TRUE(r.is_permutation);
  std::uint64_t total = 0;
  for (auto [len, count] : *r.cycle_type) total += len * count;
  EXPECT_EQ(total, 8u);
  EXPECT_EQ(cycle_structure(inst, inst.field()), cycle_structure(inst, inst.field()));
}

TEST(Permcheck, BudgetGuard) {
  auto F = FieldSpec::standard(29);
  try {
    (void)check(identity, *F);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
  }
  try {
    (void)inverse_table(identity, *FieldSpec::standard(21));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
  }
}

TEST(Permcheck, InverseTableBasics) {
  auto F = FieldSpec::make(3, 0b1011);
  const auto id = inverse_table(identity, *F);
  for (Bits a = 0; a < 8; ++a) {
    ASSERT_EQ(id.preimages(a).size(), 1u);
    EXPECT_EQ(id.preimages(a)[0], a);
  }
  const auto sq = inverse_table([&](Bits x) { return F->square(x); }, *F);
  for (Bits a = 0; a < 8; ++a) EXPECT_EQ(sq.preimages(a)[0], F->sqrt(a));
  const auto as = inverse_table([&](Bits x) { return F->square(x) ^ x; }, *F);
  EXPECT_FALSE(as.all_singletons());
  std::size_t total = 0;
  for (Bits a = 0; a < 8; ++a) total += as.preimages(a).size();
  EXPECT_EQ(total, 8u);
}

TEST(Permcheck, InverseTableMatchesInverterF1) {
  const auto inst = instantiate(FamilyId::F1, {1, 0});
  const auto table = inverse_table(inst, inst.field());
  EXPECT_TRUE(table.all_singletons());
  for (Bits a = 0; a < 8; ++a) EXPECT_EQ(table.preimages(a)[0], invert(inst, a).x);
}

TEST(Permcheck, CycleStructure) {
  auto F4 = FieldSpec::make(2, 0b111);
  EXPECT_EQ(cycle_structure([&](Bits x) { return F4->square(x); }, *F4),
            (CycleType{{1, 2}, {2, 1}}));
  EXPECT_EQ(cycle_structure(identity, *FieldSpec::standard(6)), (CycleType{{1, 64}}));
  auto F8 = FieldSpec::make(3, 0b1011);
  try {
    (void)cycle_structure([&](Bits x) { return F8->square(x) ^ x; }, *F8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAPermutation);
  }
}

TEST(Permcheck, QuickReject) {
  auto F = FieldSpec::standard(8);
  auto as = [&](Bits x) { return F->square(x) ^ x; };
  const auto w = quick_reject(as, *F, 64, 7);
  ASSERT_TRUE(w);
  EXPECT_NE(w->first, w->second);
  EXPECT_EQ(as(w->first), as(w->second));
  EXPECT_EQ(quick_reject(as, *F, 64, 7), w);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_FALSE(quick_reject(identity, *F, 200, seed));
  }
  EXPECT_THROW((void)quick_reject(identity, *F, 0, 1), Error);
}

// ---- properties ----

TEST(PermcheckProperties, ThreadCountDoesNotChangeReport) {
  std::mt19937_64 rng(8);
  for (unsigned n : {12u, 14u, 16u}) {
    auto F = FieldSpec::standard(n);
    for (int rep = 0; rep < 6; ++rep) {
      RandomPolyMap f{F.get(), {{1, rng() % F->group_order()}, {static_cast<Bits>(rng() & 0xff), rng() % 64}}};
      const auto base = check(f, *F, {.threads = 1});
      for (unsigned t : {2u, 3u, 8u}) EXPECT_EQ(check(f, *F, {.threads = t}), base);
    }
    for (const auto& e : enumerate_params(FamilyId::F6, n)) {
      if (e.n != n) continue;
      const auto inst = instantiate(FamilyId::F6, e.params);
      EXPECT_EQ(check(inst, *F, {.threads = 1}), check(inst, *F, {.threads = 4}));
    }
  }
}

TEST(PermcheckProperties, VerdictMatchesInverseTable) {
  std::mt19937_64 rng(17);
  auto verify = [](auto&& f, const FieldSpec& F) {
    const auto r = check(f, F);
    const auto t = inverse_table(f, F);
    EXPECT_EQ(r.is_permutation, t.all_singletons());
    EXPECT_EQ(r.is_permutation, r.missing_count == 0);
    EXPECT_EQ(r.is_permutation, !r.collision_witness.has_value());
    if (r.collision_witness) {
      EXPECT_LT(r.collision_witness->first, r.collision_witness->second);
      EXPECT_EQ(f(r.collision_witness->first), f(r.collision_witness->second));
    }
    std::uint64_t attained = 0;
    for (std::uint64_t a = 0; a < F.size(); ++a) attained += !t.preimages(static_cast<Bits>(a)).empty();
    EXPECT_EQ(F.size() - attained, r.missing_count);
  };
  for (FamilyId id : kAllFamilies) {
    for (const auto& e : enumerate_params(id, 12)) {
      const auto inst = instantiate(id, e.params);
      verify(inst, inst.field());
    }
  }
  for (int rep = 0; rep < 50; ++rep) {
    const unsigned n = 3 + rep % 10;
    auto F = FieldSpec::standard(n);
    RandomPolyMap f{F.get(), {}};
    for (int t = 0; t < 3; ++t) {
      f.terms.emplace_back(static_cast<Bits>(rng() & (F->size() - 1)), 1 + rng() % F->group_order());
    }
    verify(f, *F);
  }
}

TEST(PermcheckProperties, QuickRejectWitnessesAreGenuine) {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 200; ++rep) {
    auto F = FieldSpec::standard(8);
    RandomPolyMap f{F.get(), {{1, 1 + rng() % 254}, {1, 1 + rng() % 254}, {1, 1}}};
    const auto w = quick_reject(f, *F, 24, rng());
    if (!w) continue;
    EXPECT_EQ(f(w->first), f(w->second));
    EXPECT_FALSE(check(f, *F).is_permutation);
  }
}

TEST(PermcheckProperties, ModulusIndependence) {
  // Every irreducible of degree 8 and 5, against each family instance there.
  for (unsigned n : {5u, 8u}) {
    std::vector<std::uint64_t> moduli;
    for (std::uint64_t p = (1u << n) | 1; p < (2u << n); p += 2) {
      if (is_irreducible(p)) moduli.push_back(p);
    }
    ASSERT_GE(moduli.size(), 2u);
    for (FamilyId id : kAllFamilies) {
      for (const auto& e : enumerate_params(id, n)) {
        if (e.n != n) continue;
        std::optional<bool> verdict;
        for (auto mod : moduli) {
          const auto inst = instantiate(id, e.params, FieldSpec::make(n, mod));
          const bool v = check(inst, inst.field()).is_permutation;
          if (verdict) {
            EXPECT_EQ(*verdict, v);
          } else {
            verdict = v;
          }
        }
      }
    }
  }
}
