#include "seqdft/gf2m.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <mutex>
#include <unordered_map>

#include "seqdft/error.hpp"
#include "seqdft/gfpoly.hpp"
#include "seqdft/numtheory.hpp"

namespace seqdft {

namespace {

// Primitive moduli, indexed by degree.
constexpr std::array<const char*, 33> kModuli = {
    nullptr,
    nullptr,
    "x^2+x+1",
    "x^3+x+1",
    "x^4+x+1",
    "x^5+x^2+1",
    "x^6+x+1",
    "x^7+x+1",
    "x^8+x^4+x^3+x^2+1",
    "x^9+x^4+1",
    "x^10+x^3+1",
    "x^11+x^2+1",
    "x^12+x^6+x^4+x+1",
    "x^13+x^4+x^3+x+1",
    "x^14+x^10+x^6+x+1",
    "x^15+x+1",
    "x^16+x^12+x^3+x+1",
    "x^17+x^3+1",
    "x^18+x^7+1",
    "x^19+x^5+x^2+x+1",
    "x^20+x^3+1",
    "x^21+x^2+1",
    "x^22+x+1",
    "x^23+x^5+1",
    "x^24+x^7+x^2+x+1",
    "x^25+x^3+1",
    "x^26+x^6+x^2+x+1",
    "x^27+x^5+x^2+x+1",
    "x^28+x^3+1",
    "x^29+x^2+1",
    "x^30+x^6+x^4+x+1",
    "x^31+x^3+1",
    "x^32+x^22+x^2+x+1",
};

void check_same(const FieldElement& a, const FieldElement& b) {
  if (&a.ctx() != &b.ctx()) invalid("field elements belong to different fields");
}

}  // namespace

BitPoly default_modulus(unsigned m) {
  if (m < 2 || m > FieldCtx::kMaxDegree) invalid("field degree must be in [2, 32], got " + std::to_string(m));
  return BitPoly::parse(kModuli[m]);
}

FieldPtr FieldCtx::standard(unsigned m) {
  if (m < 2 || m > kMaxDegree) invalid("field degree must be in [2, 32], got " + std::to_string(m));
  static std::mutex lock;
  static std::array<FieldPtr, kMaxDegree + 1> cache;
  std::lock_guard guard(lock);
  if (!cache[m]) cache[m] = FieldPtr(new FieldCtx(default_modulus(m)));
  return cache[m];
}

FieldPtr FieldCtx::create(const BitPoly& modulus) {
  int m = modulus.degree();
  if (m < 2 || m > static_cast<int>(kMaxDegree)) invalid("field modulus degree must be in [2, 32]");
  if (modulus == default_modulus(static_cast<unsigned>(m))) return standard(static_cast<unsigned>(m));
  if (!is_primitive(modulus)) invalid("field modulus " + modulus.str() + " is not primitive");
  return FieldPtr(new FieldCtx(modulus));
}

FieldCtx::FieldCtx(const BitPoly& modulus)
    : m_(static_cast<unsigned>(modulus.degree())),
      n_((uint64_t{1} << m_) - 1),
      modulus_(modulus),
      modulus_word_(modulus.word()) {
  if (m_ <= kTableDegree) {
    exp_.resize(2 * n_);
    log_.assign(n_ + 1, 0);
    Word x = 1;
    for (uint64_t e = 0; e < n_; ++e) {
      exp_[e] = x;
      exp_[e + n_] = x;
      log_[x] = static_cast<uint32_t>(e);
      x = mul_direct(x, 2);
    }
  }
}

Word FieldCtx::mul_direct(Word a, Word b) const {
  uint64_t acc = 0;
  uint64_t aa = a;
  while (b) {
    if (b & 1) acc ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  for (int i = 2 * static_cast<int>(m_) - 2; i >= static_cast<int>(m_); --i) {
    if (acc >> i & 1) acc ^= modulus_word_ << (i - static_cast<int>(m_));
  }
  return static_cast<Word>(acc);
}

Word FieldCtx::mul(Word a, Word b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return mul_direct(a, b);
}

Word FieldCtx::pow(Word a, int64_t e) const {
  if (a == 0) {
    if (e < 0) invalid("zero has no negative powers");
    return e == 0 ? 1 : 0;
  }
  uint64_t ee = reduce_mod(e, n_);
  if (!exp_.empty()) return exp_[mulmod_u64(log_[a], ee, n_)];
  Word r = 1;
  while (ee) {
    if (ee & 1) r = mul_direct(r, a);
    a = mul_direct(a, a);
    ee >>= 1;
  }
  return r;
}

Word FieldCtx::inv(Word a) const {
  if (a == 0) invalid("zero has no inverse");
  if (!exp_.empty()) return exp_[(n_ - log_[a]) % n_];
  return pow(a, static_cast<int64_t>(n_ - 1));
}

Word FieldCtx::exp(int64_t e) const {
  uint64_t ee = reduce_mod(e, n_);
  if (!exp_.empty()) return exp_[ee];
  return pow(2, static_cast<int64_t>(ee));
}

uint64_t FieldCtx::dlog(Word a) const {
  if (a == 0) invalid("discrete log of zero");
  if (!contains(a)) invalid("value outside the field");
  if (!exp_.empty()) return log_[a];
  uint64_t out = 0;
  subgroup_log(*this, 2, n_, a, out);
  return out;
}

int FieldCtx::trace(Word a) const {
  Word acc = 0;
  Word x = a;
  for (unsigned i = 0; i < m_; ++i) {
    acc ^= x;
    x = sqr(x);
  }
  return static_cast<int>(acc & 1);
}

uint64_t FieldCtx::element_order(Word a) const {
  if (a == 0) invalid("zero has no multiplicative order");
  uint64_t order = n_;
  for (auto [p, e] : factor_u64(n_)) {
    for (unsigned i = 0; i < e; ++i) {
      if (pow(a, static_cast<int64_t>(order / p)) == 1) {
        order /= p;
      } else {
        break;
      }
    }
  }
  return order;
}

FieldElement FieldCtx::element(Word bits) const {
  if (!contains(bits)) invalid("coordinate word exceeds field width");
  return FieldElement(shared_from_this(), bits);
}

FieldElement FieldCtx::generator() const { return element(2); }
FieldElement FieldCtx::zero() const { return element(0); }
FieldElement FieldCtx::one() const { return element(1); }

std::string FieldCtx::format(Word a) const {
  if (a == 0) return "0";
  if (a == 1) return "1";
  return "a^" + std::to_string(dlog(a));
}

std::string FieldCtx::format_hex(Word a) const {
  static const char kDigits[] = "0123456789abcdef";
  std::string out;
  do {
    out.insert(out.begin(), kDigits[a & 15]);
    a >>= 4;
  } while (a);
  return "0x" + out;
}

Word FieldCtx::parse(std::string_view text) const {
  auto bad = [&]() -> Word { fail(ErrorKind::Parse, "cannot parse field element '" + std::string(text) + "'"); };
  if (text == "0") return 0;
  if (text == "1") return 1;
  if (text == "a") return exp(1);
  if (text.size() > 2 && text.substr(0, 2) == "a^") {
    int64_t e = 0;
    bool neg = false;
    size_t i = 2;
    if (text[i] == '-') {
      neg = true;
      ++i;
    }
    if (i == text.size()) return bad();
    for (; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') return bad();
      e = e * 10 + (text[i] - '0');
      if (e > (int64_t{1} << 40)) return bad();
    }
    return exp(neg ? -e : e);
  }
  if (text.size() > 2 && text.substr(0, 2) == "0x") {
    uint64_t v = 0;
    for (size_t i = 2; i < text.size(); ++i) {
      char c = text[i];
      int d;
      if (c >= '0' && c <= '9') {
        d = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        d = c - 'a' + 10;
      } else if (c >= 'A' && c <= 'F') {
        d = c - 'A' + 10;
      } else {
        return bad();
      }
      v = v * 16 + static_cast<uint64_t>(d);
      if (v > 0xffffffffull) return bad();
    }
    if (!contains(static_cast<Word>(v))) return bad();
    return static_cast<Word>(v);
  }
  return bad();
}

FieldElement::FieldElement(FieldPtr ctx, Word bits) : ctx_(std::move(ctx)), bits_(bits) {
  if (!ctx_) invalid("field element without a field");
  if (!ctx_->contains(bits_)) invalid("coordinate word exceeds field width");
}

FieldElement FieldElement::pow(int64_t e) const { return {ctx_, ctx_->pow(bits_, e)}; }
FieldElement FieldElement::inv() const { return {ctx_, ctx_->inv(bits_)}; }
uint64_t FieldElement::dlog() const { return ctx_->dlog(bits_); }
int FieldElement::trace() const { return ctx_->trace(bits_); }
std::string FieldElement::str() const { return ctx_->format(bits_); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.ctx_, a.bits_ ^ b.bits_};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.ctx_, a.ctx_->mul(a.bits_, b.bits_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.ctx_, a.ctx_->div(a.bits_, b.bits_)};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return &a.ctx() == &b.ctx() && a.bits_ == b.bits_;
}

std::vector<uint64_t> coset_of(uint64_t k, uint64_t n) {
  if (n == 0 || n % 2 == 0) invalid("cyclotomic cosets need an odd modulus");
  std::vector<uint64_t> members;
  uint64_t x = k % n;
  do {
    members.push_back(x);
    x = mulmod_u64(x, 2, n);
  } while (x != k % n);
  return members;
}

std::vector<Coset> cyclotomic_cosets(uint64_t n) {
  if (n == 0 || n % 2 == 0) invalid("cyclotomic cosets need an odd modulus");
  std::vector<uint8_t> seen(n, 0);
  std::vector<Coset> out;
  for (uint64_t k = 0; k < n; ++k) {
    if (seen[k]) continue;
    Coset c{k, coset_of(k, n)};
    for (uint64_t x : c.members) seen[x] = 1;
    out.push_back(std::move(c));
  }
  return out;
}

FieldElement subfield_embed(const FieldElement& a, const FieldCtx& sub, const FieldPtr& super) {
  if (&a.ctx() != &sub) invalid("element does not belong to the subfield context");
  if (super->m() % sub.m() != 0) {
    invalid("GF(2^" + std::to_string(sub.m()) + ") is not a subfield of GF(2^" + std::to_string(super->m()) + ")");
  }
  if (a.is_zero()) return super->zero();
  // Image of x: a root of the subfield modulus inside the order-(2^k - 1) subgroup.
  const uint64_t step = super->order() / sub.order();
  const BitPoly& f = sub.modulus();
  Word root = 0;
  for (uint64_t c = 1; c <= sub.order() && root == 0; ++c) {
    const Word r = super->exp(static_cast<int64_t>(mulmod_u64(c, step, super->order())));
    Word v = 0;
    for (int i = f.degree(); i >= 0; --i) v = super->mul(v, r) ^ static_cast<Word>(f.coeff(i));
    if (v == 0) root = r;
  }
  Word out = 0;
  for (int i = static_cast<int>(sub.m()) - 1; i >= 0; --i) out = super->mul(out, root) ^ ((a.bits() >> i) & 1);
  return super->element(out);
}

bool subgroup_log(const FieldCtx& ctx, Word g, uint64_t n, Word v, uint64_t& out) {
  if (v == 0 || g == 0) return false;
  if (ctx.pow(v, static_cast<int64_t>(n)) != 1) return false;
  uint64_t steps = static_cast<uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  if (steps == 0) steps = 1;
  std::unordered_map<Word, uint64_t> baby;
  baby.reserve(steps * 2);
  Word x = 1;
  for (uint64_t j = 0; j < steps; ++j) {
    baby.emplace(x, j);
    x = ctx.mul(x, g);
  }
  Word giant = ctx.inv(ctx.pow(g, static_cast<int64_t>(steps)));
  Word y = v;
  for (uint64_t i = 0; i <= n / steps + 1; ++i) {
    auto it = baby.find(y);
    if (it != baby.end()) {
      out = (i * steps + it->second) % n;
      return true;
    }
    y = ctx.mul(y, giant);
  }
  return false;
}

}  // namespace seqdft
