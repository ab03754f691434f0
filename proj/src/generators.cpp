#include "seqdft/generators.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "seqdft/crt.hpp"
#include "seqdft/error.hpp"
#include "seqdft/gfpoly.hpp"
#include "seqdft/numtheory.hpp"

namespace seqdft {

const char* kind_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::Filter:
      return "filter";
    case GeneratorKind::Combiner:
      return "combiner";
    case GeneratorKind::A51:
      return "a51";
  }
  return "unknown";
}

void GeneratorSpec::validate() const {
  if (kind == GeneratorKind::A51) {
    if (frame >> 22) invalid("A5/1 frame number has more than 22 bits");
    return;
  }
  if (lfsrs.empty()) invalid("generator has no LFSRs");
  if (!func) invalid("generator has no Boolean function");
  for (size_t i = 0; i < lfsrs.size(); ++i) {
    const LfsrSpec& l = lfsrs[i];
    const int m = l.poly.degree();
    if (m < 1 || m > 64) invalid("LFSR " + std::to_string(i + 1) + " degree must be in [1, 64]");
    if (!l.poly.coeff(0)) invalid("LFSR " + std::to_string(i + 1) + " feedback needs a constant term");
    if (l.state && l.state->size() != static_cast<size_t>(m)) {
      invalid("LFSR " + std::to_string(i + 1) + " state has " + std::to_string(l.state->size()) +
              " bits, register length is " + std::to_string(m));
    }
  }
  if (kind == GeneratorKind::Filter) {
    if (lfsrs.size() != 1) invalid("a filter generator has exactly one LFSR");
    if (taps.size() != func->arity()) {
      invalid("filter has " + std::to_string(taps.size()) + " taps but the function takes " +
              std::to_string(func->arity()) + " inputs");
    }
    std::set<unsigned> seen;
    for (unsigned t : taps) {
      if (t >= static_cast<unsigned>(lfsrs[0].poly.degree())) invalid("tap " + std::to_string(t) + " outside the register");
      if (!seen.insert(t).second) invalid("tap " + std::to_string(t) + " repeated");
    }
    return;
  }
  if (func->arity() != lfsrs.size()) {
    invalid("combiner has " + std::to_string(lfsrs.size()) + " LFSRs but the function takes " +
            std::to_string(func->arity()) + " inputs");
  }
  const std::vector<uint64_t> p = periods();
  for (size_t i = 0; i < p.size(); ++i) {
    for (size_t j = i + 1; j < p.size(); ++j) {
      if (gcd_u64(p[i], p[j]) != 1) {
        invalid("LFSR periods " + std::to_string(p[i]) + " and " + std::to_string(p[j]) + " are not coprime");
      }
    }
  }
}

bool GeneratorSpec::has_states() const {
  return std::all_of(lfsrs.begin(), lfsrs.end(), [](const LfsrSpec& l) { return l.state.has_value(); });
}

std::vector<BitPoly> GeneratorSpec::feedbacks() const {
  std::vector<BitPoly> out;
  for (const LfsrSpec& l : lfsrs) out.push_back(l.poly);
  return out;
}

std::vector<uint64_t> GeneratorSpec::periods() const {
  std::vector<uint64_t> out;
  for (const LfsrSpec& l : lfsrs) {
    if (is_irreducible(l.poly) && l.poly.degree() <= 64) {
      out.push_back(poly_root_order(l.poly));
    } else {
      const unsigned m = static_cast<unsigned>(l.poly.degree());
      out.push_back(period(Lfsr(l.poly, l.state ? *l.state : reference_state(m))));
    }
  }
  return out;
}

std::vector<unsigned> GeneratorSpec::lengths() const {
  std::vector<unsigned> out;
  for (const LfsrSpec& l : lfsrs) out.push_back(static_cast<unsigned>(l.poly.degree()));
  return out;
}

GeneratorSpec GeneratorSpec::with_states(const std::vector<Bits>& states) const {
  if (states.size() != lfsrs.size()) invalid("one state per LFSR is required");
  GeneratorSpec out = *this;
  for (size_t i = 0; i < states.size(); ++i) out.lfsrs[i].state = states[i];
  return out;
}

GeneratorSpec GeneratorSpec::with_reference_states() const {
  std::vector<Bits> states;
  for (unsigned m : lengths()) states.push_back(reference_state(m));
  return with_states(states);
}

namespace {

std::vector<Lfsr> build_registers(const GeneratorSpec& spec) {
  if (!spec.has_states()) invalid("generator config lacks initial states");
  std::vector<Lfsr> regs;
  for (size_t i = 0; i < spec.lfsrs.size(); ++i) {
    regs.emplace_back(spec.lfsrs[i].poly, *spec.lfsrs[i].state);
    if (regs.back().is_zero()) invalid("LFSR " + std::to_string(i + 1) + " has the all-zero state");
  }
  return regs;
}

}  // namespace

Bits filter_keystream(const GeneratorSpec& spec, size_t count) {
  if (spec.kind != GeneratorKind::Filter) invalid("not a filter generator");
  spec.validate();
  Lfsr reg = build_registers(spec).front();
  const BooleanFunc& f = *spec.func;
  Bits out(count);
  for (size_t t = 0; t < count; ++t) {
    uint32_t x = 0;
    for (size_t i = 0; i < spec.taps.size(); ++i) x |= static_cast<uint32_t>(reg.tap(spec.taps[i])) << i;
    out[t] = f.evaluate_mask(x);
    reg.step();
  }
  return out;
}

Bits combiner_keystream(const GeneratorSpec& spec, size_t count) {
  if (spec.kind != GeneratorKind::Combiner) invalid("not a combiner generator");
  spec.validate();
  std::vector<Lfsr> regs = build_registers(spec);
  const BooleanFunc& f = *spec.func;
  Bits out(count);
  for (size_t t = 0; t < count; ++t) {
    uint32_t x = 0;
    for (size_t i = 0; i < regs.size(); ++i) x |= static_cast<uint32_t>(regs[i].step()) << i;
    out[t] = f.evaluate_mask(x);
  }
  return out;
}

Bits keystream(const GeneratorSpec& spec, size_t count) {
  switch (spec.kind) {
    case GeneratorKind::Filter:
      return filter_keystream(spec, count);
    case GeneratorKind::Combiner:
      return combiner_keystream(spec, count);
    case GeneratorKind::A51: {
      spec.validate();
      if (count > A51::kOutputBits) invalid("A5/1 produces 228 bits per frame");
      Bits bits = a51_run(spec.key, spec.frame);
      bits.resize(count);
      return bits;
    }
  }
  return {};
}

uint64_t combiner_period(const GeneratorSpec& spec) {
  uint64_t p = 1;
  for (uint64_t r : spec.periods()) p = lcm_u64(p, r);
  return p;
}

std::vector<uint64_t> predicted_combiner_support(const GeneratorSpec& spec) {
  if (spec.kind != GeneratorKind::Combiner) invalid("support prediction needs a combiner");
  spec.validate();
  const std::vector<uint64_t> r = spec.periods();
  const uint64_t big_n = combiner_period(spec);
  std::vector<std::vector<uint64_t>> components;
  for (size_t i = 0; i < spec.lfsrs.size(); ++i) {
    if (!is_irreducible(spec.lfsrs[i].poly)) invalid("support prediction needs irreducible feedback");
    // Component spectrum support: the coset of -1 modulo r_i.
    components.push_back(coset_of(r[i] - 1, r[i]));
    std::sort(components.back().begin(), components.back().end());
  }
  std::vector<std::vector<uint64_t>> lifted;
  for (uint32_t mask : spec.func->anf()) {
    std::vector<std::vector<uint64_t>> parts;
    std::vector<uint64_t> moduli;
    uint64_t n_v = 1;
    for (size_t i = 0; i < spec.lfsrs.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      parts.push_back(components[i]);
      moduli.push_back(r[i]);
      n_v *= r[i];
    }
    std::vector<uint64_t> support = parts.empty() ? std::vector<uint64_t>{0} : product_support(parts, moduli);
    lifted.push_back(lift_support(support, n_v, big_n));
  }
  return xor_support(lifted);
}

Spectrum combiner_spectrum(const GeneratorSpec& spec) {
  const uint64_t n = combiner_period(spec);
  FieldPtr ctx = FieldCtx::standard(minimal_field_degree(n));
  const Word root = aligned_root(*ctx, spec.feedbacks());
  return dft(PeriodicSeq(keystream(spec, n)), ctx, root);
}

uint8_t majority(uint8_t a, uint8_t b, uint8_t c) { return static_cast<uint8_t>((a & b) | (b & c) | (a & c)); }

void A51::clock_one(size_t i) {
  const uint32_t mask = (uint32_t{1} << kLengths[i]) - 1;
  const uint32_t fb = static_cast<uint32_t>(std::popcount(regs_[i] & kTaps[i]) & 1);
  regs_[i] = ((regs_[i] << 1) & mask) | fb;
  ++counters_.register_clocks[i];
}

void A51::clock_all(uint8_t in) {
  for (size_t i = 0; i < 3; ++i) {
    clock_one(i);
    regs_[i] ^= in & 1u;
  }
}

std::array<bool, 3> A51::clock_majority() {
  std::array<uint8_t, 3> c{};
  for (size_t i = 0; i < 3; ++i) c[i] = static_cast<uint8_t>(regs_[i] >> kClockBits[i] & 1);
  const uint8_t maj = majority(c[0], c[1], c[2]);
  std::array<bool, 3> moved{};
  for (size_t i = 0; i < 3; ++i) {
    if (c[i] == maj) {
      clock_one(i);
      moved[i] = true;
    }
  }
  ++counters_.majority_cycles;
  return moved;
}

uint8_t A51::output() const {
  uint8_t out = 0;
  for (size_t i = 0; i < 3; ++i) out ^= static_cast<uint8_t>(regs_[i] >> (kLengths[i] - 1) & 1);
  return out;
}

void A51::setup(const std::array<uint8_t, 8>& key, uint32_t frame) {
  if (frame >> 22) invalid("A5/1 frame number has more than 22 bits");
  regs_ = {0, 0, 0};
  counters_ = Counters{};
  for (unsigned i = 0; i < kKeyCycles; ++i) {
    clock_all(static_cast<uint8_t>(key[i / 8] >> (i % 8) & 1));
    ++counters_.load_cycles;
  }
  for (unsigned i = 0; i < kFrameCycles; ++i) {
    clock_all(static_cast<uint8_t>(frame >> i & 1));
    ++counters_.load_cycles;
  }
  for (unsigned i = 0; i < kMixCycles; ++i) {
    clock_majority();
    ++counters_.mix_cycles;
  }
  ready_ = true;
  emitted_ = 0;
}

uint8_t A51::next_bit() {
  if (!ready_) invalid("A5/1 used before key setup");
  if (emitted_ >= kOutputBits) invalid("A5/1 frame exhausted after 228 output bits");
  clock_majority();
  ++counters_.output_cycles;
  ++emitted_;
  return output();
}

Bits A51::keystream() {
  Bits out;
  out.reserve(kOutputBits);
  while (emitted_ < kOutputBits) out.push_back(next_bit());
  return out;
}

Bits a51_run(const std::array<uint8_t, 8>& key, uint32_t frame) {
  A51 cipher;
  cipher.setup(key, frame);
  return cipher.keystream();
}

FilterBounds filter_lc_bounds(unsigned l, unsigned d) {
  auto binom = [](unsigned n, unsigned k) {
    if (k > n) return uint64_t{0};
    uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  uint64_t upper = 0;
  for (unsigned i = 1; i <= d; ++i) upper += binom(l, i);
  return {upper, binom(l, d)};
}

namespace {

int measure_lc(const Bits& bits) { return berlekamp_massey(bits).L; }

bool equally_spaced(std::vector<unsigned> taps) {
  std::sort(taps.begin(), taps.end());
  for (size_t i = 2; i < taps.size(); ++i) {
    if (taps[i] - taps[i - 1] != taps[1] - taps[0]) return false;
  }
  return true;
}

}  // namespace

LcBoundsReport lc_bounds_check(const GeneratorSpec& spec) {
  spec.validate();
  GeneratorSpec live = spec.has_states() ? spec : spec.with_reference_states();
  LcBoundsReport report;
  if (spec.kind == GeneratorKind::Filter) {
    const unsigned l = static_cast<unsigned>(spec.lfsrs[0].poly.degree());
    const unsigned d = static_cast<unsigned>(algebraic_degree(*spec.func));
    const FilterBounds b = filter_lc_bounds(l, d);
    report.component_L.push_back(static_cast<int>(l));
    report.predicted = b.upper;
    report.lower_bound = equally_spaced(spec.taps) ? b.lower : 0;
    report.measured = measure_lc(filter_keystream(live, static_cast<size_t>(2 * b.upper + 2)));
    report.within_bounds = static_cast<uint64_t>(report.measured) <= b.upper &&
                           static_cast<uint64_t>(report.measured) >= report.lower_bound;
    report.equals_prediction = static_cast<uint64_t>(report.measured) == b.upper;
    return report;
  }
  if (spec.kind != GeneratorKind::Combiner) invalid("linear-complexity bounds need a filter or combiner");
  std::vector<uint64_t> comp;
  std::vector<Lfsr> regs;
  for (const LfsrSpec& l : live.lfsrs) {
    Lfsr reg(l.poly, *l.state);
    const int L = measure_lc(Lfsr(reg).run(static_cast<size_t>(2 * l.poly.degree())));
    report.component_L.push_back(L);
    comp.push_back(static_cast<uint64_t>(L));
    regs.push_back(reg);
  }
  report.predicted = evaluate_integer(*spec.func, comp);
  report.within_bounds = true;
  for (uint32_t mask : spec.func->anf()) {
    MonomialBound mb;
    mb.mask = mask;
    mb.bound = 1;
    for (size_t i = 0; i < comp.size(); ++i) {
      if (mask >> i & 1) mb.bound *= comp[i];
    }
    const size_t len = static_cast<size_t>(2 * mb.bound + 2);
    Bits prod(len, 1);
    for (size_t i = 0; i < regs.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      Bits s = Lfsr(regs[i]).run(len);
      for (size_t t = 0; t < len; ++t) prod[t] &= s[t];
    }
    mb.measured = measure_lc(prod);
    if (static_cast<uint64_t>(mb.measured) > mb.bound) report.within_bounds = false;
    report.monomials.push_back(mb);
  }
  report.measured = measure_lc(combiner_keystream(live, static_cast<size_t>(2 * report.predicted + 2)));
  if (static_cast<uint64_t>(report.measured) > report.predicted) report.within_bounds = false;
  report.equals_prediction = static_cast<uint64_t>(report.measured) == report.predicted;
  return report;
}

}  // namespace seqdft
