#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seqdft {

// Polynomial over GF(2). Coefficient i is bit i of the packed words; the
// representation is always trimmed so degree() is exact.
class BitPoly {
 public:
  BitPoly() = default;

  static BitPoly from_word(uint64_t word);
  static BitPoly monomial(unsigned exponent);
  static BitPoly from_exponents(std::initializer_list<unsigned> exponents);

  // Accepts "x^6+x^4+x^2+x+1", hex "0x57", or a bit string with the
  // constant term first ("1110101").
  static BitPoly parse(std::string_view text);

  // -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
  bool coeff(unsigned i) const;
  void set_coeff(unsigned i, bool value);
  size_t weight() const;

  // Packed coefficients; requires degree < 64.
  uint64_t word() const;
  const std::vector<uint64_t>& words() const { return words_; }

  std::string str() const;
  std::string hex() const;
  std::string bits() const;

  BitPoly& operator+=(const BitPoly& other);
  BitPoly shifted(unsigned by) const;

  friend BitPoly operator+(BitPoly a, const BitPoly& b) { return a += b; }
  friend BitPoly operator*(const BitPoly& a, const BitPoly& b);
  friend bool operator==(const BitPoly& a, const BitPoly& b) = default;

 private:
  void trim();

  std::vector<uint64_t> words_;
};

// Ordering by degree, then by coefficient word.
bool poly_less(const BitPoly& a, const BitPoly& b);

std::pair<BitPoly, BitPoly> poly_divmod(const BitPoly& a, const BitPoly& b);
BitPoly poly_mod(const BitPoly& a, const BitPoly& b);
BitPoly poly_gcd(BitPoly a, BitPoly b);
BitPoly poly_divexact(const BitPoly& a, const BitPoly& b);
BitPoly poly_derivative(const BitPoly& f);
BitPoly poly_mulmod(const BitPoly& a, const BitPoly& b, const BitPoly& modulus);
BitPoly poly_powmod(BitPoly base, uint64_t e, const BitPoly& modulus);
BitPoly poly_square(const BitPoly& a);

// x^(2^k) mod modulus by k repeated squarings.
BitPoly poly_frobenius(unsigned k, const BitPoly& modulus);

// Reciprocal x^deg f(1/x).
BitPoly poly_reciprocal(const BitPoly& f);

}  // namespace seqdft
