#include "seqdft/gfpoly.hpp"

#include <algorithm>

#include "seqdft/bitmatrix.hpp"
#include "seqdft/error.hpp"
#include "seqdft/numtheory.hpp"

namespace seqdft {

BmResult berlekamp_massey(std::span<const uint8_t> s) {
  if (s.empty()) invalid("Berlekamp-Massey needs at least one bit");
  const size_t n = s.size();
  std::vector<uint8_t> c(n + 1, 0), b(n + 1, 0), t;
  c[0] = b[0] = 1;
  size_t L = 0;
  size_t m = 1;
  for (size_t i = 0; i < n; ++i) {
    uint8_t d = s[i] & 1;
    for (size_t j = 1; j <= L; ++j) d ^= c[j] & s[i - j];
    if (d == 0) {
      ++m;
      continue;
    }
    t = c;
    for (size_t j = 0; j + m <= n; ++j) c[j + m] ^= b[j];
    if (2 * L <= i) {
      L = i + 1 - L;
      b = std::move(t);
      m = 1;
    } else {
      ++m;
    }
  }
  BmResult out;
  out.L = static_cast<int>(L);
  for (size_t j = 0; j <= L; ++j) {
    if (c[j]) out.poly.set_coeff(static_cast<unsigned>(L - j), true);
  }
  return out;
}

namespace {

BitPoly poly_sqrt(const BitPoly& f) {
  BitPoly r;
  for (int i = 0; i <= f.degree(); i += 2) {
    if (f.coeff(static_cast<unsigned>(i))) r.set_coeff(static_cast<unsigned>(i / 2), true);
  }
  return r;
}

void square_free(const BitPoly& f, int scale, std::vector<Factor>& out) {
  if (f.degree() < 1) return;
  BitPoly fp = poly_derivative(f);
  if (fp.is_zero()) {
    square_free(poly_sqrt(f), scale * 2, out);
    return;
  }
  BitPoly c = poly_gcd(f, fp);
  BitPoly w = poly_divexact(f, c);
  int i = 1;
  while (!w.is_one()) {
    BitPoly y = poly_gcd(w, c);
    BitPoly fac = poly_divexact(w, y);
    if (fac.degree() >= 1) out.push_back({fac, i * scale});
    w = y;
    c = poly_divexact(c, y);
    ++i;
  }
  if (c.degree() >= 1) square_free(poly_sqrt(c), scale * 2, out);
}

std::vector<BitPoly> berlekamp_split(const BitPoly& f) {
  const int n = f.degree();
  if (n <= 1) return {f};
  BitMatrix a(static_cast<size_t>(n), static_cast<size_t>(n));
  BitPoly row = BitPoly::monomial(0);
  BitPoly x2 = poly_mod(BitPoly::monomial(2), f);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool v = row.coeff(static_cast<unsigned>(j)) != (i == j);
      a.set(static_cast<size_t>(j), static_cast<size_t>(i), v);
    }
    row = poly_mulmod(row, x2, f);
  }
  std::vector<Bits> basis = a.nullspace();
  const size_t k = basis.size();
  std::vector<BitPoly> parts{f};
  if (k <= 1) return parts;
  for (const Bits& vb : basis) {
    BitPoly v;
    for (size_t i = 0; i < vb.size(); ++i) {
      if (vb[i]) v.set_coeff(static_cast<unsigned>(i), true);
    }
    if (v.degree() < 1) continue;
    std::vector<BitPoly> next;
    for (const BitPoly& h : parts) {
      if (h.degree() <= 1) {
        next.push_back(h);
        continue;
      }
      BitPoly g0 = poly_gcd(h, v);
      if (g0.degree() >= 1 && g0.degree() < h.degree()) {
        next.push_back(g0);
        next.push_back(poly_divexact(h, g0));
      } else {
        next.push_back(h);
      }
    }
    parts = std::move(next);
    if (parts.size() == k) break;
  }
  if (parts.size() != k) invalid("factorization of " + f.str() + " did not split completely");
  return parts;
}

}  // namespace

std::vector<Factor> factorize(const BitPoly& f) {
  if (f.degree() < 1) invalid("factorization needs a polynomial of degree at least 1");
  std::vector<Factor> sf;
  square_free(f, 1, sf);
  std::vector<Factor> out;
  for (const Factor& part : sf) {
    for (BitPoly& p : berlekamp_split(part.poly)) out.push_back({std::move(p), part.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
  std::vector<Factor> merged;
  for (Factor& fac : out) {
    if (!merged.empty() && merged.back().poly == fac.poly) {
      merged.back().multiplicity += fac.multiplicity;
    } else {
      merged.push_back(std::move(fac));
    }
  }
  return merged;
}

bool is_irreducible(const BitPoly& f) {
  const int d = f.degree();
  if (d < 1) invalid("irreducibility needs a polynomial of degree at least 1");
  if (d == 1) return true;
  if (!f.coeff(0)) return false;
  BitPoly x = BitPoly::monomial(1);
  BitPoly power = poly_mod(x, f);
  for (int i = 1; i <= d / 2; ++i) {
    power = poly_mod(poly_square(power), f);
    if (!poly_gcd(f, power + x).is_one()) return false;
  }
  return true;
}

uint64_t poly_root_order(const BitPoly& f) {
  const int d = f.degree();
  if (d < 1 || d > 64) invalid("root order needs a polynomial of degree 1..64");
  if (!f.coeff(0)) invalid("root order needs a nonzero constant term");
  if (!is_irreducible(f)) invalid(f.str() + " is not irreducible");
  uint64_t order = d == 64 ? ~uint64_t{0} : (uint64_t{1} << d) - 1;
  const BitPoly x = BitPoly::monomial(1);
  const BitPoly one = poly_mod(BitPoly::monomial(0), f);
  for (auto [p, e] : factor_u64(order)) {
    for (unsigned i = 0; i < e; ++i) {
      if (poly_powmod(x, order / p, f) == one) {
        order /= p;
      } else {
        break;
      }
    }
  }
  return order;
}

bool is_primitive(const BitPoly& f) {
  const int d = f.degree();
  if (d < 1) invalid("primitivity needs a polynomial of degree at least 1");
  if (d > 64) invalid("primitivity test supports degree up to 64");
  if (!f.coeff(0) || !is_irreducible(f)) return false;
  uint64_t full = d == 64 ? ~uint64_t{0} : (uint64_t{1} << d) - 1;
  return poly_root_order(f) == full;
}

Word poly_eval(const FieldCtx& ctx, const BitPoly& f, Word x) {
  Word acc = 0;
  for (int i = f.degree(); i >= 0; --i) {
    acc = ctx.mul(acc, x);
    if (f.coeff(static_cast<unsigned>(i))) acc ^= 1;
  }
  return acc;
}

BitPoly min_poly_of_element(const FieldElement& a) {
  if (a.is_zero()) invalid("minimal polynomial of zero is not defined here");
  const FieldCtx& ctx = a.ctx();
  std::vector<Word> coeffs{1};
  Word c = a.bits();
  do {
    std::vector<Word> next(coeffs.size() + 1, 0);
    for (size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] ^= coeffs[i];
      next[i] ^= ctx.mul(coeffs[i], c);
    }
    coeffs = std::move(next);
    c = ctx.sqr(c);
  } while (c != a.bits());
  BitPoly out;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] > 1) invalid("minimal polynomial has coefficients outside GF(2)");
    if (coeffs[i]) out.set_coeff(static_cast<unsigned>(i), true);
  }
  return out;
}

}  // namespace seqdft
