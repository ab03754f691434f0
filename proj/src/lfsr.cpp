#include "seqdft/lfsr.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>

#include "seqdft/error.hpp"
#include "seqdft/numtheory.hpp"

namespace seqdft {

Bits parse_bits(std::string_view text) {
  Bits out;
  for (char c : text) {
    if (c == '0' || c == '1') {
      out.push_back(static_cast<uint8_t>(c - '0'));
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      fail(ErrorKind::Parse, std::string("unexpected character '") + c + "' in bit string");
    }
  }
  return out;
}

std::string format_bits(const Bits& bits) {
  std::string out;
  out.reserve(bits.size());
  for (uint8_t b : bits) out.push_back(b ? '1' : '0');
  return out;
}

std::string pack_hex(const Bits& bits) {
  static const char kDigits[] = "0123456789ABCDEF";
  std::string out;
  for (size_t i = 0; i < bits.size(); i += 8) {
    unsigned byte = 0;
    for (size_t j = 0; j < 8; ++j) {
      byte <<= 1;
      if (i + j < bits.size() && bits[i + j]) byte |= 1;
    }
    out.push_back(kDigits[byte >> 4]);
    out.push_back(kDigits[byte & 15]);
  }
  return out;
}

PeriodicSeq::PeriodicSeq(Bits bits) : bits_(std::move(bits)) {
  if (bits_.empty()) invalid("periodic sequence needs at least one bit");
  for (uint8_t& b : bits_) b &= 1;
}

uint8_t PeriodicSeq::operator[](int64_t t) const { return bits_[reduce_mod(t, bits_.size())]; }

PeriodicSeq PeriodicSeq::rotate(int64_t tau) const {
  const size_t n = bits_.size();
  const size_t shift = reduce_mod(tau, n);
  Bits out(n);
  for (size_t t = 0; t < n; ++t) out[t] = bits_[(t + shift) % n];
  return PeriodicSeq(std::move(out));
}

Bits PeriodicSeq::window(int64_t start, size_t count) const {
  Bits out(count);
  const size_t n = bits_.size();
  size_t pos = reduce_mod(start, n);
  for (size_t i = 0; i < count; ++i) {
    out[i] = bits_[pos];
    if (++pos == n) pos = 0;
  }
  return out;
}

Lfsr::Lfsr(const BitPoly& feedback, const Bits& state) : feedback_(feedback) {
  const int m = feedback.degree();
  if (m < 1 || m > 64) invalid("LFSR feedback degree must be in [1, 64], got " + std::to_string(m));
  if (!feedback.coeff(0)) invalid("LFSR feedback " + feedback.str() + " needs a nonzero constant term");
  m_ = static_cast<unsigned>(m);
  taps_ = 0;
  for (unsigned k = 0; k < m_; ++k) {
    if (feedback.coeff(k)) taps_ |= uint64_t{1} << k;
  }
  set_state(state);
}

Bits Lfsr::state() const {
  Bits out(m_);
  for (unsigned i = 0; i < m_; ++i) out[i] = tap(i);
  return out;
}

void Lfsr::set_state(const Bits& state) {
  if (state.size() != m_) {
    invalid("LFSR state has " + std::to_string(state.size()) + " bits, register length is " + std::to_string(m_));
  }
  state_ = 0;
  for (unsigned i = 0; i < m_; ++i) {
    if (state[i] & 1) state_ |= uint64_t{1} << i;
  }
}

uint8_t Lfsr::step() {
  const uint8_t out = static_cast<uint8_t>(state_ & 1);
  const uint64_t fb = static_cast<uint64_t>(std::popcount(state_ & taps_) & 1);
  state_ = (state_ >> 1) | (fb << (m_ - 1));
  return out;
}

Bits Lfsr::run(size_t count) {
  Bits out(count);
  for (size_t i = 0; i < count; ++i) out[i] = step();
  return out;
}

Bits reference_state(unsigned m) {
  if (m == 0) invalid("register length must be positive");
  Bits s(m, 0);
  s[m - 1] = 1;
  return s;
}

uint64_t period(const Lfsr& l) {
  if (l.is_zero()) invalid("the zero state has no period");
  if (l.length() > 40) invalid("period search is limited to registers of length 40");
  Lfsr probe = l;
  const uint64_t start = l.state_word();
  uint64_t p = 0;
  do {
    probe.step();
    ++p;
  } while (probe.state_word() != start);
  return p;
}

PeriodicSeq lfsr_sequence(const BitPoly& feedback, const Bits& state) {
  Lfsr l(feedback, state);
  uint64_t p = period(l);
  return PeriodicSeq(l.run(p));
}

Bits trace_sequence(const FieldElement& beta, size_t count) {
  const FieldCtx& ctx = beta.ctx();
  Bits out(count);
  Word x = beta.bits();
  const Word a = ctx.exp(1);
  for (size_t t = 0; t < count; ++t) {
    out[t] = static_cast<uint8_t>(ctx.trace(x));
    x = ctx.mul(x, a);
  }
  return out;
}

std::optional<uint64_t> find_shift(const PeriodicSeq& s, const PeriodicSeq& u) {
  if (s.period() != u.period()) invalid("find_shift needs sequences of equal period");
  const size_t n = s.period();
  Bits doubled = s.bits();
  doubled.insert(doubled.end(), s.bits().begin(), s.bits().end() - 1);
  const Bits& pattern = u.bits();
  auto it = std::search(doubled.begin(), doubled.end(),
                        std::boyer_moore_horspool_searcher(pattern.begin(), pattern.end()));
  if (it == doubled.end()) return std::nullopt;
  uint64_t k = static_cast<uint64_t>(it - doubled.begin());
  if (k >= n) return std::nullopt;
  return k;
}

BitMatrix state_matrix(const Lfsr& l) {
  const unsigned m = l.length();
  BitMatrix t(m, m);
  for (unsigned c = 0; c + 1 < m; ++c) t.set(c + 1, c, true);
  for (unsigned r = 0; r < m; ++r) t.set(r, m - 1, l.feedback().coeff(r));
  return t;
}

Bits matrix_step(const BitMatrix& t, const Bits& state) { return t.left_mul(state); }

PeriodicSeq decimate(const PeriodicSeq& s, int64_t k) {
  const uint64_t n = s.period();
  const uint64_t kk = reduce_mod(k, n);
  if (gcd_u64(kk, n) != 1 && n > 1) {
    invalid("decimation by " + std::to_string(k) + " is not coprime to the period " + std::to_string(n));
  }
  Bits out(n);
  uint64_t idx = 0;
  for (uint64_t t = 0; t < n; ++t) {
    out[t] = s.bits()[idx];
    idx = (idx + kk) % n;
  }
  return PeriodicSeq(std::move(out));
}

}  // namespace seqdft
