#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "seqdft/bitpoly.hpp"

namespace seqdft {

// Polynomial-basis coordinates of a GF(2^m) element.
using Word = uint32_t;

class FieldElement;

// GF(2^m), 2 <= m <= 32, defined by a primitive modulus. Immutable once
// built; share it through std::shared_ptr.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  static constexpr unsigned kMaxDegree = 32;
  static constexpr unsigned kTableDegree = 20;

  // Cached context over the default primitive modulus of degree m.
  static std::shared_ptr<const FieldCtx> standard(unsigned m);

  // Context over a caller-chosen modulus; it must be primitive.
  static std::shared_ptr<const FieldCtx> create(const BitPoly& modulus);

  unsigned m() const { return m_; }
  uint64_t order() const { return n_; }
  const BitPoly& modulus() const { return modulus_; }
  bool contains(Word a) const { return m_ == 32 || a < (Word{1} << m_); }

  Word add(Word a, Word b) const { return a ^ b; }
  Word mul(Word a, Word b) const;
  Word sqr(Word a) const { return mul(a, a); }
  Word inv(Word a) const;
  Word div(Word a, Word b) const { return mul(a, inv(b)); }
  // a^(e mod n) for nonzero a; 0^e = 0 for e > 0.
  Word pow(Word a, int64_t e) const;
  // The generator raised to e.
  Word exp(int64_t e) const;
  uint64_t dlog(Word a) const;
  int trace(Word a) const;
  // Multiplicative order of a nonzero element.
  uint64_t element_order(Word a) const;

  FieldElement element(Word bits) const;
  FieldElement generator() const;
  FieldElement zero() const;
  FieldElement one() const;

  // "0", "1" or "a^k".
  std::string format(Word a) const;
  std::string format_hex(Word a) const;
  // Inverse of format and format_hex.
  Word parse(std::string_view text) const;

 private:
  explicit FieldCtx(const BitPoly& modulus);

  Word mul_direct(Word a, Word b) const;

  unsigned m_;
  uint64_t n_;
  BitPoly modulus_;
  uint64_t modulus_word_;
  std::vector<Word> exp_;
  std::vector<uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

// Value type pairing coordinates with their field.
class FieldElement {
 public:
  FieldElement(FieldPtr ctx, Word bits);

  Word bits() const { return bits_; }
  const FieldCtx& ctx() const { return *ctx_; }
  const FieldPtr& ctx_ptr() const { return ctx_; }
  bool is_zero() const { return bits_ == 0; }

  FieldElement pow(int64_t e) const;
  FieldElement inv() const;
  uint64_t dlog() const;
  int trace() const;
  std::string str() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr ctx_;
  Word bits_;
};

// Default primitive modulus for GF(2^m).
BitPoly default_modulus(unsigned m);

struct Coset {
  uint64_t leader;
  std::vector<uint64_t> members;
};

// Cyclotomic cosets {k 2^j mod n} of odd n, ordered by leader; members in
// doubling order starting at the leader.
std::vector<Coset> cyclotomic_cosets(uint64_t n);

// Coset of k modulo n in doubling order.
std::vector<uint64_t> coset_of(uint64_t k, uint64_t n);

// Image of a in super when the degree of sub divides the degree of super,
// mapping the generator of sub to alpha^((2^M - 1) / (2^p - 1)).
FieldElement subfield_embed(const FieldElement& a, const FieldCtx& sub, const FieldPtr& super);

// Discrete log of v to base g inside the cyclic subgroup of order n that g
// generates; returns false when v is not in that subgroup.
bool subgroup_log(const FieldCtx& ctx, Word g, uint64_t n, Word v, uint64_t& out);

}  // namespace seqdft
