#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "seqdft/error.hpp"
#include "seqdft/gf2m.hpp"
#include "seqdft/gfpoly.hpp"

using namespace seqdft;

TEST(Gf2m, DefaultModuliArePrimitive) {
  for (unsigned m = 2; m <= 32; ++m) {
    const BitPoly f = default_modulus(m);
    EXPECT_EQ(f.degree(), static_cast<int>(m));
    EXPECT_TRUE(is_primitive(f)) << f.str();
  }
  EXPECT_EQ(default_modulus(6), BitPoly::parse("x^6+x+1"));
}

TEST(Gf2m, MultiplicationMatchesCarrylessOracle) {
  std::mt19937_64 rng(11);
  for (unsigned m : {2u, 3u, 5u, 6u, 10u, 15u, 20u, 21u, 24u, 30u, 32u}) {
    auto f = FieldCtx::standard(m);
    const uint64_t mod = f->modulus().word();
    const uint64_t mask = m == 32 ? 0xFFFFFFFFull : (uint64_t{1} << m) - 1;
    for (int i = 0; i < 500; ++i) {
      const Word a = static_cast<Word>(rng() & mask);
      const Word b = static_cast<Word>(rng() & mask);
      EXPECT_EQ(f->mul(a, b), oracle::field_mul(a, b, mod)) << m;
      if (a) {
        EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
        EXPECT_EQ(f->exp(static_cast<int64_t>(f->dlog(a))), a);
      }
    }
  }
}

TEST(Gf2m, GeneratorHasFullOrderAndTraceIsLinear) {
  for (unsigned m = 2; m <= 12; ++m) {
    auto f = FieldCtx::standard(m);
    std::set<Word> seen;
    for (uint64_t e = 0; e < f->order(); ++e) seen.insert(f->exp(static_cast<int64_t>(e)));
    EXPECT_EQ(seen.size(), f->order());
    size_t ones = 0;
    for (Word a = 0; a <= f->order(); ++a) {
      const int t = f->trace(a);
      ASSERT_TRUE(t == 0 || t == 1);
      ones += static_cast<size_t>(t);
      EXPECT_EQ(f->trace(f->sqr(a)), t);
      EXPECT_EQ(f->trace(a ^ 1u) ^ f->trace(1u), t);
    }
    EXPECT_EQ(ones, size_t{1} << (m - 1));
  }
}

TEST(Gf2m, PowersAndElementOrders) {
  auto f = FieldCtx::standard(6);
  const Word rho = f->exp(3);
  EXPECT_EQ(f->element_order(rho), 21u);
  EXPECT_EQ(f->pow(rho, 21), 1u);
  EXPECT_EQ(f->pow(rho, -1), f->inv(rho));
  EXPECT_EQ(f->pow(0, 5), 0u);
  uint64_t log = 0;
  ASSERT_TRUE(subgroup_log(*f, rho, 21, f->pow(rho, 17), log));
  EXPECT_EQ(log, 17u);
  EXPECT_FALSE(subgroup_log(*f, rho, 21, f->exp(1), log));
  auto big = FieldCtx::standard(30);
  const Word g = big->exp(((static_cast<int64_t>(1) << 30) - 1) / 651);
  ASSERT_EQ(big->element_order(g), 651u);
  ASSERT_TRUE(subgroup_log(*big, g, 651, big->pow(g, 325), log));
  EXPECT_EQ(log, 325u);
}

TEST(Gf2m, CustomModulusValidation) {
  EXPECT_THROW(FieldCtx::create(BitPoly::parse("x^6+x^4+x^2+x+1")), Error);
  auto f = FieldCtx::create(BitPoly::parse("x^5+x^2+1"));
  EXPECT_EQ(f->m(), 5u);
  EXPECT_EQ(FieldCtx::create(default_modulus(7)), FieldCtx::standard(7));
}

TEST(Gf2m, FormatAndParseRoundTrip) {
  auto f = FieldCtx::standard(8);
  for (Word a = 0; a < 256; ++a) {
    EXPECT_EQ(f->parse(f->format(a)), a);
    EXPECT_EQ(f->parse(f->format_hex(a)), a);
  }
  EXPECT_EQ(f->format(0), "0");
  EXPECT_EQ(f->format(1), "1");
  EXPECT_EQ(f->format(f->exp(4)), "a^4");
}

TEST(Gf2m, FieldElementsRefuseMixedFields) {
  auto f6 = FieldCtx::standard(6);
  auto f5 = FieldCtx::standard(5);
  const FieldElement a = f6->generator();
  const FieldElement b = f5->generator();
  EXPECT_THROW((void)(a + b), Error);
  EXPECT_THROW((void)(a * b), Error);
  EXPECT_EQ((a * a.inv()), f6->one());
  EXPECT_EQ(a.pow(63), f6->one());
}

TEST(Gf2m, CyclotomicCosetsModulo21) {
  const auto cosets = cyclotomic_cosets(21);
  std::vector<std::set<uint64_t>> got;
  for (const Coset& c : cosets) got.emplace_back(c.members.begin(), c.members.end());
  const std::vector<std::set<uint64_t>> expected = {
      {0}, {1, 2, 4, 8, 16, 11}, {3, 6, 12}, {5, 10, 20, 19, 17, 13}, {7, 14}, {9, 18, 15}};
  EXPECT_EQ(got, expected);
  for (uint64_t k : coset_of(5, 21)) EXPECT_TRUE(expected[3].count(k));
  EXPECT_EQ(coset_of(5, 21).front(), 5u);
}

TEST(Gf2m, SubfieldEmbeddingIsAHomomorphism) {
  auto sub = FieldCtx::standard(3);
  auto super = FieldCtx::standard(6);
  for (Word a = 0; a < 8; ++a) {
    for (Word b = 0; b < 8; ++b) {
      const FieldElement ea = subfield_embed(sub->element(a), *sub, super);
      const FieldElement eb = subfield_embed(sub->element(b), *sub, super);
      EXPECT_EQ(subfield_embed(sub->element(sub->mul(a, b)), *sub, super), ea * eb);
      EXPECT_EQ(subfield_embed(sub->element(a ^ b), *sub, super), ea + eb);
    }
  }
}
