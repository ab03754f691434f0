#include "seqdft/bitpoly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

#include "seqdft/error.hpp"

namespace seqdft {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

[[noreturn]] void parse_error(std::string_view text, const std::string& why) {
  fail(ErrorKind::Parse, "cannot parse polynomial '" + std::string(text) + "': " + why);
}

unsigned parse_exponent(std::string_view text, std::string_view term) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(term.data(), term.data() + term.size(), value);
  if (ec != std::errc() || ptr != term.data() + term.size() || term.empty()) {
    parse_error(text, "bad exponent in term '" + std::string(term) + "'");
  }
  if (value > 1u << 20) parse_error(text, "exponent too large");
  return value;
}

}  // namespace

BitPoly BitPoly::from_word(uint64_t word) {
  BitPoly p;
  if (word) p.words_.push_back(word);
  return p;
}

BitPoly BitPoly::monomial(unsigned exponent) {
  BitPoly p;
  p.set_coeff(exponent, true);
  return p;
}

BitPoly BitPoly::from_exponents(std::initializer_list<unsigned> exponents) {
  BitPoly p;
  for (unsigned e : exponents) p.set_coeff(e, !p.coeff(e));
  return p;
}

BitPoly BitPoly::parse(std::string_view raw) {
  std::string text = strip_spaces(raw);
  if (text.empty()) parse_error(raw, "empty input");
  BitPoly p;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    unsigned bit = 0;
    for (auto it = text.rbegin(); it != text.rend() - 2; ++it, bit += 4) {
      char c = static_cast<char>(std::tolower(static_cast<unsigned char>(*it)));
      int v;
      if (c >= '0' && c <= '9') {
        v = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        v = c - 'a' + 10;
      } else {
        parse_error(raw, std::string("bad hex digit '") + *it + "'");
      }
      for (int j = 0; j < 4; ++j) {
        if (v >> j & 1) p.set_coeff(bit + j, true);
      }
    }
    return p;
  }
  if (text.find_first_not_of("01") == std::string::npos) {
    for (size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1') p.set_coeff(static_cast<unsigned>(i), true);
    }
    return p;
  }
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('+', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view term(text.data() + pos, end - pos);
    unsigned e;
    if (term == "1") {
      e = 0;
    } else if (term == "0") {
      pos = end + 1;
      continue;
    } else if (term == "x") {
      e = 1;
    } else if (term.size() > 2 && term.substr(0, 2) == "x^") {
      e = parse_exponent(raw, term.substr(2));
    } else {
      parse_error(raw, "unexpected term '" + std::string(term) + "'");
    }
    p.set_coeff(e, !p.coeff(e));
    pos = end + 1;
  }
  return p;
}

int BitPoly::degree() const {
  if (words_.empty()) return -1;
  return static_cast<int>(64 * (words_.size() - 1)) + std::bit_width(words_.back()) - 1;
}

bool BitPoly::coeff(unsigned i) const {
  size_t w = i / 64;
  return w < words_.size() && (words_[w] >> (i % 64) & 1);
}

void BitPoly::set_coeff(unsigned i, bool value) {
  size_t w = i / 64;
  if (value) {
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= uint64_t{1} << (i % 64);
  } else if (w < words_.size()) {
    words_[w] &= ~(uint64_t{1} << (i % 64));
    trim();
  }
}

size_t BitPoly::weight() const {
  size_t total = 0;
  for (uint64_t w : words_) total += std::popcount(w);
  return total;
}

uint64_t BitPoly::word() const {
  if (words_.size() > 1) invalid("polynomial of degree " + std::to_string(degree()) + " does not fit one word");
  return words_.empty() ? 0 : words_[0];
}

std::string BitPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (!coeff(static_cast<unsigned>(i))) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else if (i == 1) {
      out += 'x';
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out;
}

std::string BitPoly::hex() const {
  if (is_zero()) return "0x0";
  static const char kDigits[] = "0123456789abcdef";
  std::string out;
  for (int nib = degree() / 4; nib >= 0; --nib) {
    unsigned v = 0;
    for (int j = 0; j < 4; ++j) {
      if (coeff(static_cast<unsigned>(4 * nib + j))) v |= 1u << j;
    }
    out += kDigits[v];
  }
  return "0x" + out;
}

std::string BitPoly::bits() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) out += coeff(static_cast<unsigned>(i)) ? '1' : '0';
  return out;
}

BitPoly& BitPoly::operator+=(const BitPoly& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  trim();
  return *this;
}

BitPoly BitPoly::shifted(unsigned by) const {
  if (is_zero()) return {};
  BitPoly p;
  size_t ws = by / 64;
  unsigned bs = by % 64;
  p.words_.assign(words_.size() + ws + 1, 0);
  for (size_t i = 0; i < words_.size(); ++i) {
    p.words_[i + ws] ^= words_[i] << bs;
    if (bs) p.words_[i + ws + 1] ^= words_[i] >> (64 - bs);
  }
  p.trim();
  return p;
}

BitPoly operator*(const BitPoly& a, const BitPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const BitPoly& small = a.weight() <= b.weight() ? a : b;
  const BitPoly& large = &small == &a ? b : a;
  BitPoly out;
  out.words_.assign(a.words_.size() + b.words_.size() + 1, 0);
  for (int i = 0; i <= small.degree(); ++i) {
    if (!small.coeff(static_cast<unsigned>(i))) continue;
    size_t ws = static_cast<size_t>(i) / 64;
    unsigned bs = static_cast<unsigned>(i) % 64;
    for (size_t j = 0; j < large.words_.size(); ++j) {
      out.words_[j + ws] ^= large.words_[j] << bs;
      if (bs) out.words_[j + ws + 1] ^= large.words_[j] >> (64 - bs);
    }
  }
  out.trim();
  return out;
}

void BitPoly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

bool poly_less(const BitPoly& a, const BitPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (size_t i = wa.size(); i-- > 0;) {
    if (wa[i] != wb[i]) return wa[i] < wb[i];
  }
  return false;
}

std::pair<BitPoly, BitPoly> poly_divmod(const BitPoly& a, const BitPoly& b) {
  if (b.is_zero()) invalid("polynomial division by zero");
  BitPoly q;
  BitPoly r = a;
  int db = b.degree();
  while (r.degree() >= db) {
    unsigned s = static_cast<unsigned>(r.degree() - db);
    q.set_coeff(s, true);
    r += b.shifted(s);
  }
  return {q, r};
}

BitPoly poly_mod(const BitPoly& a, const BitPoly& b) { return poly_divmod(a, b).second; }

BitPoly poly_gcd(BitPoly a, BitPoly b) {
  while (!b.is_zero()) {
    BitPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BitPoly poly_divexact(const BitPoly& a, const BitPoly& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) invalid(b.str() + " does not divide " + a.str());
  return q;
}

BitPoly poly_derivative(const BitPoly& f) {
  BitPoly d;
  for (int i = 1; i <= f.degree(); i += 2) {
    if (f.coeff(static_cast<unsigned>(i))) d.set_coeff(static_cast<unsigned>(i - 1), true);
  }
  return d;
}

BitPoly poly_square(const BitPoly& a) {
  BitPoly out;
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeff(static_cast<unsigned>(i))) out.set_coeff(static_cast<unsigned>(2 * i), true);
  }
  return out;
}

BitPoly poly_mulmod(const BitPoly& a, const BitPoly& b, const BitPoly& modulus) {
  return poly_mod(a * b, modulus);
}

BitPoly poly_powmod(BitPoly base, uint64_t e, const BitPoly& modulus) {
  BitPoly r = poly_mod(BitPoly::monomial(0), modulus);
  base = poly_mod(base, modulus);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, modulus);
    e >>= 1;
    if (e) base = poly_mod(poly_square(base), modulus);
  }
  return r;
}

BitPoly poly_frobenius(unsigned k, const BitPoly& modulus) {
  BitPoly x = poly_mod(BitPoly::monomial(1), modulus);
  for (unsigned i = 0; i < k; ++i) x = poly_mod(poly_square(x), modulus);
  return x;
}

BitPoly poly_reciprocal(const BitPoly& f) {
  BitPoly r;
  int d = f.degree();
  for (int i = 0; i <= d; ++i) {
    if (f.coeff(static_cast<unsigned>(i))) r.set_coeff(static_cast<unsigned>(d - i), true);
  }
  return r;
}

}  // namespace seqdft
