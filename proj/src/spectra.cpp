#include "seqdft/spectra.hpp"

#include <algorithm>
#include <sstream>

#include "seqdft/error.hpp"
#include "seqdft/gfpoly.hpp"
#include "seqdft/numtheory.hpp"

namespace seqdft {

Spectrum::Spectrum(FieldPtr ctx, Word root, std::vector<Word> values)
    : ctx_(std::move(ctx)), root_(root), values_(std::move(values)) {
  if (!ctx_) invalid("spectrum without a field");
  if (values_.empty()) invalid("spectrum needs at least one value");
}

std::vector<uint64_t> Spectrum::support() const {
  std::vector<uint64_t> out;
  for (size_t k = 0; k < values_.size(); ++k) {
    if (values_[k]) out.push_back(k);
  }
  return out;
}

std::optional<uint64_t> Spectrum::exponent(size_t k) const {
  uint64_t e = 0;
  if (!subgroup_log(*ctx_, root_, values_.size(), values_[k], e)) return std::nullopt;
  return e;
}

std::string Spectrum::format_value(size_t k) const {
  const Word v = values_[k];
  if (v == 0) return "0";
  if (v == 1) return "1";
  auto e = exponent(k);
  if (!e) return ctx_->format_hex(v);
  return "a^" + std::to_string(*e);
}

std::string Spectrum::sparse_str() const {
  std::string out;
  for (uint64_t k : support()) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(k) + ": " + format_value(k) + ")";
  }
  return out;
}

std::string Spectrum::dense_str() const {
  std::string out;
  for (size_t k = 0; k < values_.size(); ++k) {
    if (k) out += ',';
    out += format_value(k);
  }
  return out;
}

std::string Spectrum::machine_str() const {
  std::string out;
  for (uint64_t k : support()) {
    if (!out.empty()) out += ',';
    auto e = exponent(k);
    out += std::to_string(k) + ":" + (e ? std::to_string(*e) : ctx_->format_hex(values_[k]));
  }
  return out;
}

bool operator==(const Spectrum& a, const Spectrum& b) {
  return &a.ctx() == &b.ctx() && a.root_ == b.root_ && a.values_ == b.values_;
}

Spectrum parse_spectrum_machine(std::string_view text, FieldPtr ctx, Word root, size_t n) {
  std::vector<Word> values(n, 0);
  std::string item;
  std::stringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos) fail(ErrorKind::Parse, "spectrum entry '" + item + "' lacks ':'");
    uint64_t k = 0;
    try {
      k = std::stoull(item.substr(0, colon));
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "bad spectrum index in '" + item + "'");
    }
    if (k >= n) fail(ErrorKind::Parse, "spectrum index " + std::to_string(k) + " out of range");
    std::string v = item.substr(colon + 1);
    if (v.rfind("0x", 0) == 0) {
      values[k] = ctx->parse(v);
    } else {
      try {
        values[k] = ctx->pow(root, static_cast<int64_t>(std::stoull(v)));
      } catch (const std::exception&) {
        fail(ErrorKind::Parse, "bad spectrum exponent in '" + item + "'");
      }
    }
  }
  return Spectrum(std::move(ctx), root, std::move(values));
}

unsigned minimal_field_degree(uint64_t n) {
  if (n == 0 || n % 2 == 0) invalid("DFT length must be odd, got " + std::to_string(n));
  unsigned m = std::max(2u, order_of_two(n));
  if (m > FieldCtx::kMaxDegree) {
    invalid("period " + std::to_string(n) + " needs GF(2^" + std::to_string(m) + "), beyond GF(2^32)");
  }
  return m;
}

Word default_root(const FieldCtx& ctx, uint64_t n) {
  if (n == 0 || ctx.order() % n != 0) {
    invalid("period " + std::to_string(n) + " does not divide 2^" + std::to_string(ctx.m()) + " - 1");
  }
  return ctx.exp(static_cast<int64_t>(ctx.order() / n));
}

Word aligned_root(const FieldCtx& ctx, const std::vector<BitPoly>& feedbacks) {
  Word root = 1;
  uint64_t total = 1;
  for (const BitPoly& f : feedbacks) {
    const uint64_t r = poly_root_order(f);
    if (gcd_u64(r, total) != 1) invalid("component periods are not pairwise coprime");
    if (ctx.order() % r != 0) {
      invalid("GF(2^" + std::to_string(ctx.m()) + ") holds no roots of " + f.str());
    }
    const uint64_t step = ctx.order() / r;
    Word found = 0;
    for (uint64_t j = 1; j <= r && !found; ++j) {
      Word cand = ctx.exp(static_cast<int64_t>(mulmod_u64(step, j, ctx.order())));
      if (poly_eval(ctx, f, cand) == 0) found = cand;
    }
    if (!found) invalid("no root of " + f.str() + " found");
    root = ctx.mul(root, found);
    total *= r;
  }
  return root;
}

void check_root_order(const FieldCtx& ctx, Word root, uint64_t n) {
  if (root == 0 || ctx.element_order(root) != n) {
    invalid("transform root does not have multiplicative order " + std::to_string(n));
  }
}

Spectrum dft(const PeriodicSeq& s, const FieldPtr& ctx, Word root) {
  const uint64_t n = s.period();
  if (ctx->order() % n != 0) {
    invalid("period " + std::to_string(n) + " does not divide 2^" + std::to_string(ctx->m()) + " - 1");
  }
  check_root_order(*ctx, root, n);
  std::vector<Word> values(n, 0);
  for (const Coset& c : cyclotomic_cosets(n)) {
    const Word step = ctx->pow(root, static_cast<int64_t>(c.leader));
    Word pw = 1;
    Word acc = 0;
    for (uint64_t t = 0; t < n; ++t) {
      if (s.bits()[t]) acc ^= pw;
      pw = ctx->mul(pw, step);
    }
    for (uint64_t k : c.members) {
      values[k] = acc;
      acc = ctx->sqr(acc);
    }
  }
  return Spectrum(ctx, root, std::move(values));
}

Spectrum dft(const PeriodicSeq& s, const FieldPtr& ctx) { return dft(s, ctx, default_root(*ctx, s.period())); }

Spectrum dft(const PeriodicSeq& s) {
  FieldPtr ctx = FieldCtx::standard(minimal_field_degree(s.period()));
  return dft(s, ctx);
}

Spectrum dft_reference(const PeriodicSeq& s, const FieldPtr& ctx, Word root) {
  const uint64_t n = s.period();
  check_root_order(*ctx, root, n);
  std::vector<Word> values(n, 0);
  for (uint64_t k = 0; k < n; ++k) {
    Word acc = 0;
    for (uint64_t t = 0; t < n; ++t) {
      if (s.bits()[t]) acc ^= ctx->pow(root, static_cast<int64_t>(mulmod_u64(t, k, n)));
    }
    values[k] = acc;
  }
  return Spectrum(ctx, root, std::move(values));
}

PeriodicSeq idft(const Spectrum& spectrum) {
  const FieldCtx& ctx = spectrum.ctx();
  const uint64_t n = spectrum.n();
  const Word inv_root = ctx.inv(spectrum.root());
  Bits out(n);
  for (uint64_t t = 0; t < n; ++t) {
    const Word step = ctx.pow(inv_root, static_cast<int64_t>(t));
    Word pw = 1;
    Word acc = 0;
    for (uint64_t k = 0; k < n; ++k) {
      acc ^= ctx.mul(spectrum[k], pw);
      pw = ctx.mul(pw, step);
    }
    if (acc > 1) invalid("spectrum does not describe a binary sequence (index " + std::to_string(t) + ")");
    out[t] = static_cast<uint8_t>(acc);
  }
  return PeriodicSeq(std::move(out));
}

PeriodicSeq trace_reconstruct(const Spectrum& spectrum) {
  const FieldCtx& ctx = spectrum.ctx();
  const uint64_t n = spectrum.n();
  const Word inv_root = ctx.inv(spectrum.root());
  std::vector<Coset> active;
  for (const Coset& c : cyclotomic_cosets(n)) {
    Word v = spectrum[c.leader];
    for (uint64_t k : c.members) {
      if (spectrum[k] != v) invalid("spectrum is not conjugate-closed at index " + std::to_string(k));
      v = ctx.sqr(v);
    }
    if (spectrum[c.leader]) active.push_back(c);
  }
  Bits out(n, 0);
  for (const Coset& c : active) {
    const Word step = ctx.pow(inv_root, static_cast<int64_t>(c.leader));
    Word x = spectrum[c.leader];
    for (uint64_t t = 0; t < n; ++t) {
      Word tr = 0;
      Word y = x;
      for (size_t i = 0; i < c.members.size(); ++i) {
        tr ^= y;
        y = ctx.sqr(y);
      }
      if (tr > 1) invalid("coset trace left GF(2)");
      out[t] ^= static_cast<uint8_t>(tr);
      x = ctx.mul(x, step);
    }
  }
  return PeriodicSeq(std::move(out));
}

size_t spectral_weight(const Spectrum& spectrum) {
  return static_cast<size_t>(std::count_if(spectrum.values().begin(), spectrum.values().end(),
                                           [](Word v) { return v != 0; }));
}

bool linear_complexity_check(const PeriodicSeq& s) {
  Bits two = s.bits();
  two.insert(two.end(), s.bits().begin(), s.bits().end());
  const int L = berlekamp_massey(two).L;
  return spectral_weight(dft(s)) == static_cast<size_t>(L);
}

std::vector<uint64_t> zero_indices_from_roots(const BitPoly& g, const FieldCtx& ctx, Word root, uint64_t n) {
  std::vector<uint64_t> out;
  Word x = 1;
  for (uint64_t k = 0; k < n; ++k) {
    if (poly_eval(ctx, g, x) == 0) out.push_back(k);
    x = ctx.mul(x, root);
  }
  return out;
}

std::vector<uint64_t> support_from_min_poly(const BitPoly& g, const FieldCtx& ctx, Word root, uint64_t n) {
  std::vector<uint64_t> out;
  const Word inv_root = ctx.inv(root);
  Word x = 1;
  for (uint64_t k = 0; k < n; ++k) {
    if (poly_eval(ctx, g, x) == 0) out.push_back(k);
    x = ctx.mul(x, inv_root);
  }
  return out;
}

Spectrum shift_spectrum(const Spectrum& spectrum, int64_t tau) {
  const FieldCtx& ctx = spectrum.ctx();
  const uint64_t n = spectrum.n();
  const Word step = ctx.pow(spectrum.root(), -static_cast<int64_t>(reduce_mod(tau, n)));
  std::vector<Word> values(n);
  Word pw = 1;
  for (uint64_t k = 0; k < n; ++k) {
    values[k] = ctx.mul(spectrum[k], pw);
    pw = ctx.mul(pw, step);
  }
  return Spectrum(spectrum.ctx_ptr(), spectrum.root(), std::move(values));
}

PeriodicSeq lti_filter(const PeriodicSeq& s, const BitPoly& q) {
  const size_t n = s.period();
  Bits out(n, 0);
  for (int i = 0; i <= q.degree(); ++i) {
    if (!q.coeff(static_cast<unsigned>(i))) continue;
    const size_t off = static_cast<size_t>(i) % n;
    for (size_t t = 0; t < n; ++t) out[t] ^= s.bits()[(t + off) % n];
  }
  return PeriodicSeq(std::move(out));
}

std::vector<std::vector<Word>> dft_matrix(const FieldCtx& ctx, Word root, uint64_t n) {
  check_root_order(ctx, root, n);
  std::vector<std::vector<Word>> d(n, std::vector<Word>(n));
  for (uint64_t j = 0; j < n; ++j) {
    for (uint64_t k = 0; k < n; ++k) d[j][k] = ctx.pow(root, static_cast<int64_t>(mulmod_u64(j, k, n)));
  }
  return d;
}

}  // namespace seqdft
