#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "seqdft/boolfn.hpp"
#include "seqdft/error.hpp"

using namespace seqdft;

namespace {

BooleanFunc majority3() { return BooleanFunc::parse_anf("a1*a2 + a2*a3 + a1*a3"); }

BooleanFunc random_function(std::mt19937_64& rng, unsigned l) {
  Bits table(size_t{1} << l);
  for (auto& b : table) b = static_cast<uint8_t>(rng() & 1);
  return BooleanFunc::from_truth_table(l, table);
}

// Distance to the nearest affine function, by enumeration.
int64_t brute_nonlinearity(const BooleanFunc& f) {
  const unsigned l = f.arity();
  int64_t best = int64_t{1} << l;
  for (uint32_t a = 0; a < (uint32_t{1} << l); ++a) {
    for (uint32_t c = 0; c < 2; ++c) {
      int64_t d = 0;
      for (uint32_t x = 0; x < (uint32_t{1} << l); ++x) {
        d += f.evaluate_mask(x) != ((std::popcount(a & x) + c) & 1);
      }
      best = std::min(best, d);
    }
  }
  return best;
}

// Largest t such that fixing any t inputs to any values leaves the output
// distribution unchanged.
int brute_correlation_immunity(const BooleanFunc& f) {
  const unsigned l = f.arity();
  const uint32_t n = uint32_t{1} << l;
  uint32_t ones = 0;
  for (uint32_t x = 0; x < n; ++x) ones += f.evaluate_mask(x);
  int order = 0;
  for (unsigned t = 1; t <= l; ++t) {
    for (uint32_t mask = 1; mask < n; ++mask) {
      if (static_cast<unsigned>(std::popcount(mask)) != t) continue;
      for (uint32_t val = 0; val < n; ++val) {
        if ((val & ~mask) != 0) continue;
        uint32_t cnt = 0;
        uint32_t sub_ones = 0;
        for (uint32_t x = 0; x < n; ++x) {
          if ((x & mask) != val) continue;
          ++cnt;
          sub_ones += f.evaluate_mask(x);
        }
        if (static_cast<uint64_t>(sub_ones) * n != static_cast<uint64_t>(ones) * cnt) return order;
      }
    }
    order = static_cast<int>(t);
  }
  return order;
}

// Minimum degree of a nonzero g with f g = 0 or (f + 1) g = 0, by listing
// all functions of arity l <= 3.
int brute_algebraic_immunity(const BooleanFunc& f) {
  const unsigned l = f.arity();
  const uint32_t n = uint32_t{1} << l;
  bool constant = true;
  for (uint32_t x = 1; x < n; ++x) constant = constant && f.evaluate_mask(x) == f.evaluate_mask(0);
  if (constant) return 0;
  int best = static_cast<int>(l) + 1;
  for (uint64_t g = 1; g < (uint64_t{1} << n); ++g) {
    Bits table(n);
    for (uint32_t x = 0; x < n; ++x) table[x] = static_cast<uint8_t>(g >> x & 1);
    bool ann_f = true;
    bool ann_f1 = true;
    for (uint32_t x = 0; x < n; ++x) {
      if (table[x] && f.evaluate_mask(x)) ann_f = false;
      if (table[x] && !f.evaluate_mask(x)) ann_f1 = false;
    }
    if (ann_f || ann_f1) best = std::min(best, algebraic_degree(BooleanFunc::from_truth_table(l, table)));
  }
  return best;
}

}  // namespace

TEST(BooleanFunc, MajorityMetrics) {
  const BooleanFunc f = majority3();
  EXPECT_EQ(f.arity(), 3u);
  const Bits in = {1, 1, 0};
  EXPECT_EQ(f.evaluate(in), 1);
  EXPECT_EQ(f.truth_table_str(), "00010111");
  EXPECT_EQ(algebraic_degree(f), 2);
  EXPECT_TRUE(is_balanced(f));
  EXPECT_EQ(nonlinearity(f), 2);
  EXPECT_EQ(correlation_immunity(f), 0);
  EXPECT_EQ(algebraic_immunity(f), 2);
  for (double p : correlation_probabilities(f)) EXPECT_DOUBLE_EQ(p, 6.0 / 8.0);
}

TEST(BooleanFunc, ConstantsAndLinearFunctions) {
  const BooleanFunc zero = BooleanFunc::from_anf(3, {});
  EXPECT_EQ(algebraic_degree(zero), 0);
  EXPECT_FALSE(is_balanced(zero));
  EXPECT_EQ(walsh_spectrum(zero)[0], 8);
  EXPECT_EQ(nonlinearity(zero), 0);
  EXPECT_EQ(algebraic_immunity(BooleanFunc::parse_anf("1", 2)), 0);
  const BooleanFunc x = BooleanFunc::parse_anf("a1 + a2 + a3 + a4");
  EXPECT_EQ(correlation_immunity(x), 3);
  EXPECT_EQ(nonlinearity(x), 0);
  EXPECT_EQ(algebraic_immunity(BooleanFunc::parse_anf("a1 + a2")), 1);
  const BooleanFunc c = BooleanFunc::parse_anf("a1*a3 + 1", 3);
  EXPECT_EQ(c.evaluate(Bits{0, 0, 0}), 1);
  EXPECT_EQ(c.anf_str(), "a1*a3 + 1");
}

TEST(BooleanFunc, ParseErrorsNameTheToken) {
  try {
    BooleanFunc::parse_anf("a1*a2 + b3");
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    EXPECT_NE(std::string(e.what()).find("b3"), std::string::npos);
  }
  EXPECT_THROW(BooleanFunc::parse_anf("a1 +"), Error);
  EXPECT_THROW(BooleanFunc::parse_anf("a0"), Error);
  EXPECT_THROW(BooleanFunc::parse_anf("a4", 3), Error);
  EXPECT_THROW(majority3().evaluate(Bits{1, 0}), Error);
}

TEST(BooleanFunc, MoebiusRoundTrip) {
  for (unsigned l = 0; l <= 3; ++l) {
    for (uint64_t t = 0; t < (uint64_t{1} << (1u << l)); ++t) {
      Bits table(size_t{1} << l);
      for (size_t x = 0; x < table.size(); ++x) table[x] = static_cast<uint8_t>(t >> x & 1);
      const BooleanFunc f = BooleanFunc::from_truth_table(l, table);
      EXPECT_EQ(BooleanFunc::from_anf(l, f.anf()).truth_table(), table);
      EXPECT_EQ(moebius_transform(moebius_transform(table)), table);
    }
  }
  for (uint64_t t = 0; t < 65536; t += 7) {
    Bits table(16);
    for (size_t x = 0; x < 16; ++x) table[x] = static_cast<uint8_t>(t >> x & 1);
    EXPECT_EQ(BooleanFunc::from_anf(4, BooleanFunc::from_truth_table(4, table).anf()).truth_table(), table);
  }
  std::mt19937_64 rng(71);
  for (unsigned l = 5; l <= 12; ++l) {
    const BooleanFunc f = random_function(rng, l);
    EXPECT_EQ(BooleanFunc::from_anf(l, f.anf()), f);
    EXPECT_EQ(BooleanFunc::parse_anf(f.anf_str().empty() ? "0" : f.anf_str(), l), f);
  }
}

TEST(BooleanFunc, ParsevalAndWalshAgainstDefinition) {
  std::mt19937_64 rng(72);
  for (unsigned l = 1; l <= 10; ++l) {
    const BooleanFunc f = random_function(rng, l);
    const auto w = walsh_spectrum(f);
    int64_t sum = 0;
    for (int64_t v : w) sum += v * v;
    EXPECT_EQ(sum, int64_t{1} << (2 * l));
    if (l <= 6) {
      for (uint32_t a = 0; a < (uint32_t{1} << l); ++a) {
        int64_t direct = 0;
        for (uint32_t x = 0; x < (uint32_t{1} << l); ++x) direct += ((f.evaluate_mask(x) + std::popcount(a & x)) & 1) ? -1 : 1;
        EXPECT_EQ(w[a], direct);
      }
    }
  }
}

TEST(BooleanFunc, MetricsAgainstEnumeration) {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 60; ++i) {
    const unsigned l = 1 + static_cast<unsigned>(rng() % 4);
    const BooleanFunc f = random_function(rng, l);
    EXPECT_EQ(nonlinearity(f), brute_nonlinearity(f));
    EXPECT_EQ(correlation_immunity(f), brute_correlation_immunity(f)) << f.truth_table_str();
    if (l <= 3) EXPECT_EQ(algebraic_immunity(f), brute_algebraic_immunity(f)) << f.truth_table_str();
    const auto probs = correlation_probabilities(f);
    for (unsigned v = 0; v < l; ++v) {
      int agree = 0;
      for (uint32_t x = 0; x < (uint32_t{1} << l); ++x) agree += f.evaluate_mask(x) == (x >> v & 1);
      EXPECT_DOUBLE_EQ(probs[v], agree / static_cast<double>(1u << l));
    }
  }
}

TEST(BooleanFunc, IntegerEvaluation) {
  const std::vector<uint64_t> lengths = {2, 3, 5};
  EXPECT_EQ(evaluate_integer(majority3(), lengths), 31u);
  const std::vector<uint64_t> two = {2, 3};
  EXPECT_EQ(evaluate_integer(BooleanFunc::parse_anf("a1*a2"), two), 6u);
  EXPECT_EQ(evaluate_integer(BooleanFunc::parse_anf("a1 + a2"), two), 5u);
}
