#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqdft/bitmatrix.hpp"

namespace seqdft {

// Boolean function of l variables a1..al. A monomial is a mask with bit
// i - 1 standing for a_i; truth table index bit i - 1 is the value of a_i.
class BooleanFunc {
 public:
  static constexpr unsigned kMaxVars = 20;

  static BooleanFunc from_anf(unsigned l, std::vector<uint32_t> monomials);
  static BooleanFunc from_truth_table(unsigned l, Bits table);
  // "a1*a2 + a2*a3 + a1*a3 + 1". With l = 0 the arity is the largest
  // variable index that appears.
  static BooleanFunc parse_anf(std::string_view text, unsigned l = 0);

  unsigned arity() const { return l_; }
  const std::vector<uint32_t>& anf() const { return anf_; }
  const Bits& truth_table() const { return table_; }

  uint8_t evaluate(std::span<const uint8_t> inputs) const;
  uint8_t evaluate_mask(uint32_t x) const { return table_[x]; }

  std::string anf_str() const;
  std::string truth_table_str() const { return format_table(); }

  friend bool operator==(const BooleanFunc& a, const BooleanFunc& b) {
    return a.l_ == b.l_ && a.table_ == b.table_;
  }

 private:
  BooleanFunc(unsigned l, std::vector<uint32_t> anf, Bits table);
  std::string format_table() const;

  unsigned l_;
  std::vector<uint32_t> anf_;
  Bits table_;
};

// In-place binary Moebius transform (its own inverse).
Bits moebius_transform(Bits values);

int algebraic_degree(const BooleanFunc& f);
bool is_balanced(const BooleanFunc& f);

// W(a) = sum_x (-1)^(f(x) + a.x).
std::vector<int64_t> walsh_spectrum(const BooleanFunc& f);
int64_t nonlinearity(const BooleanFunc& f);

// Largest t with W(a) = 0 for 1 <= wt(a) <= t.
int correlation_immunity(const BooleanFunc& f);

// P(f(x) = x_i) over uniform inputs, one entry per variable.
std::vector<double> correlation_probabilities(const BooleanFunc& f);

// Minimum degree of a nonzero annihilator of f or f + 1; 0 for constants.
// Limited to 10 variables.
int algebraic_immunity(const BooleanFunc& f);

// The ANF evaluated over the integers with XOR read as + and AND as *,
// e.g. the linear-complexity prediction f(L_1, ..., L_l).
uint64_t evaluate_integer(const BooleanFunc& f, std::span<const uint64_t> values);

}  // namespace seqdft
