#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "seqdft/crt.hpp"
#include "seqdft/error.hpp"
#include "seqdft/lfsr.hpp"

using namespace seqdft;

namespace {

std::vector<uint64_t> naive_solve_all(const std::vector<uint64_t>& residues, const std::vector<uint64_t>& moduli) {
  uint64_t n = 1;
  for (uint64_t m : moduli) n *= m;
  std::vector<uint64_t> hits;
  for (uint64_t x = 0; x < n; ++x) {
    bool ok = true;
    for (size_t i = 0; i < moduli.size(); ++i) ok = ok && x % moduli[i] == residues[i];
    if (ok) hits.push_back(x);
  }
  return hits;
}

// One period of the product of m-sequences, component i rotated by shifts[i].
Bits product_stream(const std::vector<Bits>& comps, const std::vector<int64_t>& shifts, size_t n) {
  Bits out(n, 1);
  for (size_t i = 0; i < comps.size(); ++i) {
    const size_t p = comps[i].size();
    for (size_t t = 0; t < n; ++t) out[t] &= comps[i][(t + static_cast<size_t>(shifts[i])) % p];
  }
  return out;
}

std::vector<Bits> reference_components() {
  return {lfsr_sequence(BitPoly::parse("x^2+x+1"), reference_state(2)).bits(),
          lfsr_sequence(BitPoly::parse("x^3+x+1"), reference_state(3)).bits(),
          lfsr_sequence(BitPoly::parse("x^5+x^2+1"), reference_state(5)).bits()};
}

}  // namespace

TEST(Crt, WorkedInstances) {
  const std::vector<Congruence> a = {{1, 3}, {0, 7}};
  EXPECT_EQ(crt_solve(a).value, 7u);
  EXPECT_EQ(crt_solve(a).modulus, 21u);
  const std::vector<Congruence> b = {{1, 3}, {3, 7}};
  EXPECT_EQ(crt_solve(b).value, 10u);
  const std::vector<Congruence> c = {{1, 3}, {3, 7}, {15, 31}};
  EXPECT_EQ(crt_solve(c).value, 325u);
  EXPECT_EQ(crt_solve(c).modulus, 651u);
  const std::vector<Congruence> neg = {{-2, 3}, {-4, 7}};
  EXPECT_EQ(crt_solve(neg).value, 10u);
  const std::vector<uint64_t> moduli = {3, 7, 31};
  EXPECT_EQ(crt_split(19, moduli), (std::vector<uint64_t>{1, 5, 19}));
  EXPECT_EQ(crt_split(0, moduli), (std::vector<uint64_t>{0, 0, 0}));
  EXPECT_EQ(crt_split(-1, moduli), (std::vector<uint64_t>{2, 6, 30}));
}

TEST(Crt, RejectsNonCoprimeModuli) {
  const std::vector<Congruence> bad = {{1, 21}, {3, 93}};
  EXPECT_THROW(crt_solve(bad), Error);
  const std::vector<Congruence> zero = {{1, 0}};
  EXPECT_THROW(crt_solve(zero), Error);
}

TEST(Crt, BijectionExhaustive) {
  for (const std::vector<uint64_t>& moduli : {std::vector<uint64_t>{3, 7}, std::vector<uint64_t>{3, 7, 31}}) {
    uint64_t n = 1;
    for (uint64_t m : moduli) n *= m;
    for (uint64_t tau = 0; tau < n; ++tau) {
      const auto residues = crt_split(static_cast<int64_t>(tau), moduli);
      std::vector<Congruence> cs;
      for (size_t i = 0; i < moduli.size(); ++i) cs.push_back({static_cast<int64_t>(residues[i]), moduli[i]});
      EXPECT_EQ(crt_solve(cs).value, tau);
      if (n == 21) EXPECT_EQ(naive_solve_all(residues, moduli), std::vector<uint64_t>{tau});
    }
  }
}

TEST(Crt, ShiftTheoremAllPairs) {
  const auto comps = reference_components();
  const std::vector<Bits> pair = {comps[0], comps[1]};
  const Bits ref = product_stream(pair, {0, 0}, 21);
  const std::vector<uint64_t> moduli = {3, 7};
  for (int64_t k1 = 0; k1 < 3; ++k1) {
    for (int64_t k2 = 0; k2 < 7; ++k2) {
      const Bits shifted = product_stream(pair, {k1, k2}, 21);
      const auto observed = oracle::rotation(ref, shifted);
      ASSERT_TRUE(observed.has_value());
      const std::vector<int64_t> shifts = {k1, k2};
      EXPECT_EQ(product_shift(shifts, moduli), *observed) << k1 << "," << k2;
    }
  }
  const std::vector<int64_t> one_left = {1, 0};
  EXPECT_EQ(product_shift(one_left, moduli), 7u);
  const std::vector<int64_t> other = {0, 1};
  EXPECT_EQ(product_shift(other, moduli), 15u);
}

TEST(Crt, ShiftTheoremSampledTriples) {
  const auto comps = reference_components();
  const Bits ref = product_stream(comps, {0, 0, 0}, 651);
  const std::vector<uint64_t> moduli = {3, 7, 31};
  std::mt19937_64 rng(61);
  for (int i = 0; i < 60; ++i) {
    const std::vector<int64_t> shifts = {static_cast<int64_t>(rng() % 3), static_cast<int64_t>(rng() % 7),
                                         static_cast<int64_t>(rng() % 31)};
    const Bits shifted = product_stream(comps, shifts, 651);
    EXPECT_EQ(PeriodicSeq(ref).rotate(static_cast<int64_t>(product_shift(shifts, moduli))).bits(), shifted);
  }
}

TEST(Crt, ProductSupport) {
  const std::vector<uint64_t> moduli = {3, 7};
  const auto s = product_support({{1, 2}, {3, 5, 6}}, moduli);
  EXPECT_EQ(s, (std::vector<uint64_t>{5, 10, 13, 17, 19, 20}));
  const std::vector<uint64_t> three = {3, 7, 31};
  const auto t = product_support({{1, 2}, {3, 5, 6}, {15, 23, 27, 29, 30}}, three);
  EXPECT_EQ(t.size(), 30u);
  for (uint64_t k : {61, 325, 650}) EXPECT_TRUE(std::binary_search(t.begin(), t.end(), k)) << k;
  // Membership oracle: x is in the product support iff each residue is.
  const std::vector<std::set<uint64_t>> sets = {{1, 2}, {3, 5, 6}, {15, 23, 27, 29, 30}};
  for (uint64_t x = 0; x < 651; ++x) {
    const bool in = sets[0].count(x % 3) && sets[1].count(x % 7) && sets[2].count(x % 31);
    EXPECT_EQ(std::binary_search(t.begin(), t.end(), x), in);
  }
}

TEST(Crt, XorAndLiftSupports) {
  EXPECT_EQ(xor_support({{1, 2, 3}}), (std::vector<uint64_t>{1, 2, 3}));
  EXPECT_TRUE(xor_support({{1, 2, 3}, {1, 2, 3}}).empty());
  EXPECT_EQ(xor_support({{1, 2}, {2, 3}, {2, 4}}), (std::vector<uint64_t>{1, 2, 3, 4}));
  const auto lifted = lift_support({5, 10}, 21, 651);
  for (uint64_t x : lifted) {
    EXPECT_EQ(x % 31, 0u);
    EXPECT_TRUE(x % 21 == 5 || x % 21 == 10);
  }
  EXPECT_EQ(lifted.size(), 2u);
  EXPECT_THROW(lift_support({1}, 21, 63), Error);
}
