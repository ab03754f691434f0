#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "seqdft/bitpoly.hpp"
#include "seqdft/boolfn.hpp"
#include "seqdft/gf2m.hpp"
#include "seqdft/lfsr.hpp"
#include "seqdft/spectra.hpp"

namespace seqdft {

enum class GeneratorKind { Filter, Combiner, A51 };

const char* kind_name(GeneratorKind kind);

struct LfsrSpec {
  BitPoly poly;
  // Absent when the state is unknown (attack input).
  std::optional<Bits> state;
};

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Combiner;
  std::vector<LfsrSpec> lfsrs;
  std::optional<BooleanFunc> func;
  // Filter: state positions feeding a1, a2, ...
  std::vector<unsigned> taps;
  // A5/1 session key (byte i holds key bits 8i..8i+7, LSB first) and frame.
  std::array<uint8_t, 8> key{};
  uint32_t frame = 0;
  // Pinned attack exponent, if any.
  std::optional<uint64_t> attack_k;

  // Throws on structural problems (arity, taps, coprime periods).
  void validate() const;
  bool has_states() const;
  std::vector<BitPoly> feedbacks() const;
  // Per-register periods: root order for irreducible feedback, else the
  // period of the configured (or reference) state.
  std::vector<uint64_t> periods() const;
  std::vector<unsigned> lengths() const;

  GeneratorSpec with_states(const std::vector<Bits>& states) const;
  GeneratorSpec with_reference_states() const;
};

// Filter and combiner keystreams; A5/1 returns its 228-bit frame keystream
// truncated or checked against count.
Bits keystream(const GeneratorSpec& spec, size_t count);
Bits filter_keystream(const GeneratorSpec& spec, size_t count);
Bits combiner_keystream(const GeneratorSpec& spec, size_t count);

// Least common multiple of the register periods.
uint64_t combiner_period(const GeneratorSpec& spec);

// Support of the combiner keystream spectrum predicted from the component
// supports: CRT products per ANF monomial, lifted to the full period, then
// the odd-count rule. Assumes irreducible feedback polynomials.
std::vector<uint64_t> predicted_combiner_support(const GeneratorSpec& spec);

// Spectrum of one full period of the combiner keystream over the minimal
// field, using the aligned root of the feedback polynomials.
Spectrum combiner_spectrum(const GeneratorSpec& spec);

// A5/1 with 19/22/23-bit registers, majority clocking on bits 8/10/10 and
// output from the three top bits.
class A51 {
 public:
  static constexpr std::array<unsigned, 3> kLengths{19, 22, 23};
  static constexpr std::array<unsigned, 3> kClockBits{8, 10, 10};
  static constexpr std::array<uint32_t, 3> kTaps{0x072000, 0x300000, 0x700080};
  static constexpr unsigned kKeyCycles = 64;
  static constexpr unsigned kFrameCycles = 22;
  static constexpr unsigned kMixCycles = 100;
  static constexpr unsigned kOutputBits = 228;

  struct Counters {
    unsigned load_cycles = 0;
    unsigned mix_cycles = 0;
    unsigned output_cycles = 0;
    std::array<uint64_t, 3> register_clocks{};
    uint64_t majority_cycles = 0;
  };

  // Runs the load and mixing phases.
  void setup(const std::array<uint8_t, 8>& key, uint32_t frame);
  // One output bit per majority-clocked cycle.
  uint8_t next_bit();
  Bits keystream();

  // Majority-clocked cycle; returns which registers moved.
  std::array<bool, 3> clock_majority();

  const std::array<uint32_t, 3>& registers() const { return regs_; }
  void set_registers(const std::array<uint32_t, 3>& regs) { regs_ = regs; }
  const Counters& counters() const { return counters_; }
  uint8_t output() const;

 private:
  void clock_all(uint8_t in);
  void clock_one(size_t i);

  std::array<uint32_t, 3> regs_{};
  Counters counters_;
  bool ready_ = false;
  unsigned emitted_ = 0;
};

uint8_t majority(uint8_t a, uint8_t b, uint8_t c);

// The 228-bit keystream for one frame.
Bits a51_run(const std::array<uint8_t, 8>& key, uint32_t frame);

struct MonomialBound {
  uint32_t mask = 0;
  uint64_t bound = 0;
  int measured = 0;
};

struct LcBoundsReport {
  std::vector<int> component_L;
  std::vector<MonomialBound> monomials;
  // Combiner: f(L_1, ..., L_l). Filter: sum_{i <= d} C(l, i).
  uint64_t predicted = 0;
  // Filter with equally spaced taps: C(l, d); zero otherwise.
  uint64_t lower_bound = 0;
  int measured = 0;
  bool within_bounds = false;
  bool equals_prediction = false;
};

struct FilterBounds {
  uint64_t upper;
  uint64_t lower;
};

// Linear-span bounds of a degree-d filter on an l-stage register.
FilterBounds filter_lc_bounds(unsigned l, unsigned d);

// Measured linear complexity (Berlekamp-Massey over twice the predicted
// bound) against the sum, product and ANF predictions.
LcBoundsReport lc_bounds_check(const GeneratorSpec& spec);

}  // namespace seqdft
