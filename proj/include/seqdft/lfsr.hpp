#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqdft/bitmatrix.hpp"
#include "seqdft/bitpoly.hpp"
#include "seqdft/gf2m.hpp"

namespace seqdft {

// "0010111" <-> {0,0,1,0,1,1,1}. Whitespace is ignored on input.
Bits parse_bits(std::string_view text);
std::string format_bits(const Bits& bits);

// Bits packed eight per byte, first bit in the most significant position,
// rendered as uppercase hex.
std::string pack_hex(const Bits& bits);

// Binary sequence of known period with cyclic indexing.
class PeriodicSeq {
 public:
  PeriodicSeq() = default;
  explicit PeriodicSeq(Bits bits);

  size_t period() const { return bits_.size(); }
  const Bits& bits() const { return bits_; }
  uint8_t operator[](int64_t t) const;

  // u_t = s_{t + tau}.
  PeriodicSeq rotate(int64_t tau) const;
  // count bits starting at index start, wrapping cyclically.
  Bits window(int64_t start, size_t count) const;
  std::string str() const { return format_bits(bits_); }

  friend bool operator==(const PeriodicSeq& a, const PeriodicSeq& b) = default;

 private:
  Bits bits_;
};

// Fibonacci LFSR with s_{i+m} = sum_{k<m} c_k s_{i+k}; the emitted bit is
// the current s_0. Register length up to 64.
class Lfsr {
 public:
  Lfsr(const BitPoly& feedback, const Bits& state);

  unsigned length() const { return m_; }
  const BitPoly& feedback() const { return feedback_; }
  // Current (s_0, ..., s_{m-1}).
  Bits state() const;
  void set_state(const Bits& state);
  bool is_zero() const { return state_ == 0; }
  // State packed with s_i at bit i.
  uint64_t state_word() const { return state_; }

  uint8_t step();
  Bits run(size_t count);

  // State bit i, i.e. s_i of the current window.
  uint8_t tap(unsigned i) const { return static_cast<uint8_t>(state_ >> i & 1); }

 private:
  BitPoly feedback_;
  unsigned m_;
  uint64_t taps_;
  uint64_t state_;
};

// State 0...01, the reference phase used throughout the attack.
Bits reference_state(unsigned m);

// Least p with state repetition. Throws for the zero state.
uint64_t period(const Lfsr& l);

// One period of the output of an LFSR with the given feedback and state.
PeriodicSeq lfsr_sequence(const BitPoly& feedback, const Bits& state);

// bit t = Tr(beta alpha^t).
Bits trace_sequence(const FieldElement& beta, size_t count);

// Least k with u_i = s_{i + k} for all i, or nothing.
std::optional<uint64_t> find_shift(const PeriodicSeq& s, const PeriodicSeq& u);

// Companion matrix acting on row-vector states: next = state * T.
BitMatrix state_matrix(const Lfsr& l);
Bits matrix_step(const BitMatrix& t, const Bits& state);

// c_t = s_{k t mod n}; requires gcd(k, n) = 1.
PeriodicSeq decimate(const PeriodicSeq& s, int64_t k);

}  // namespace seqdft
