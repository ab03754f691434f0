#include "seqdft/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>

#include "seqdft/error.hpp"

namespace seqdft {

namespace {

void check_arity(unsigned l) {
  if (l > BooleanFunc::kMaxVars) invalid("Boolean functions are limited to 20 variables");
}

bool anf_less(uint32_t a, uint32_t b) {
  const int wa = std::popcount(a);
  const int wb = std::popcount(b);
  if (wa != wb) return wa > wb;
  for (unsigned i = 0; i < 32; ++i) {
    const bool ba = a >> i & 1;
    const bool bb = b >> i & 1;
    if (ba != bb) return ba;
  }
  return false;
}

}  // namespace

Bits moebius_transform(Bits v) {
  for (size_t step = 1; step < v.size(); step <<= 1) {
    for (size_t x = 0; x < v.size(); ++x) {
      if (x & step) v[x] ^= v[x ^ step];
    }
  }
  return v;
}

BooleanFunc::BooleanFunc(unsigned l, std::vector<uint32_t> anf, Bits table)
    : l_(l), anf_(std::move(anf)), table_(std::move(table)) {}

BooleanFunc BooleanFunc::from_anf(unsigned l, std::vector<uint32_t> monomials) {
  check_arity(l);
  Bits coeffs(size_t{1} << l, 0);
  for (uint32_t m : monomials) {
    if (m >> l) invalid("monomial uses a variable beyond a" + std::to_string(l));
    coeffs[m] ^= 1;
  }
  return from_truth_table(l, moebius_transform(std::move(coeffs)));
}

BooleanFunc BooleanFunc::from_truth_table(unsigned l, Bits table) {
  check_arity(l);
  if (table.size() != (size_t{1} << l)) invalid("truth table length must be 2^l");
  for (uint8_t& b : table) b &= 1;
  Bits coeffs = moebius_transform(table);
  std::vector<uint32_t> anf;
  for (size_t m = 0; m < coeffs.size(); ++m) {
    if (coeffs[m]) anf.push_back(static_cast<uint32_t>(m));
  }
  std::sort(anf.begin(), anf.end(), anf_less);
  return BooleanFunc(l, std::move(anf), std::move(table));
}

BooleanFunc BooleanFunc::parse_anf(std::string_view text, unsigned l) {
  std::vector<uint32_t> monomials;
  unsigned max_var = 0;
  std::string cleaned;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
  }
  if (cleaned.empty()) fail(ErrorKind::Parse, "empty ANF");
  size_t pos = 0;
  while (pos <= cleaned.size()) {
    size_t end = cleaned.find('+', pos);
    if (end == std::string::npos) end = cleaned.size();
    const std::string term = cleaned.substr(pos, end - pos);
    if (term.empty()) fail(ErrorKind::Parse, "empty term in ANF '" + std::string(text) + "'");
    if (term == "1") {
      monomials.push_back(0);
    } else if (term != "0") {
      uint32_t mask = 0;
      size_t p = 0;
      while (p < term.size()) {
        size_t star = term.find('*', p);
        if (star == std::string::npos) star = term.size();
        const std::string var = term.substr(p, star - p);
        bool ok = var.size() >= 2 && var[0] == 'a' && var.size() <= 4;
        for (size_t i = 1; ok && i < var.size(); ++i) ok = std::isdigit(static_cast<unsigned char>(var[i])) != 0;
        const unsigned idx = ok ? static_cast<unsigned>(std::atoi(var.c_str() + 1)) : 0;
        if (!ok || idx == 0 || idx > kMaxVars) {
          fail(ErrorKind::Parse, "bad ANF token '" + var + "'");
        }
        if (mask >> (idx - 1) & 1) fail(ErrorKind::Parse, "variable '" + var + "' repeated in a monomial");
        mask |= uint32_t{1} << (idx - 1);
        max_var = std::max(max_var, idx);
        p = star + 1;
      }
      monomials.push_back(mask);
    }
    pos = end + 1;
  }
  if (l == 0) l = max_var;
  if (max_var > l) fail(ErrorKind::Parse, "ANF uses a" + std::to_string(max_var) + " but arity is " + std::to_string(l));
  return from_anf(l, std::move(monomials));
}

uint8_t BooleanFunc::evaluate(std::span<const uint8_t> inputs) const {
  if (inputs.size() != l_) {
    invalid("function takes " + std::to_string(l_) + " inputs, got " + std::to_string(inputs.size()));
  }
  uint32_t x = 0;
  for (unsigned i = 0; i < l_; ++i) {
    if (inputs[i] & 1) x |= uint32_t{1} << i;
  }
  return table_[x];
}

std::string BooleanFunc::anf_str() const {
  if (anf_.empty()) return "0";
  std::string out;
  for (uint32_t m : anf_) {
    if (!out.empty()) out += " + ";
    if (m == 0) {
      out += "1";
      continue;
    }
    bool first = true;
    for (unsigned i = 0; i < l_; ++i) {
      if (!(m >> i & 1)) continue;
      if (!first) out += "*";
      out += "a" + std::to_string(i + 1);
      first = false;
    }
  }
  return out;
}

std::string BooleanFunc::format_table() const {
  std::string out;
  for (uint8_t b : table_) out.push_back(b ? '1' : '0');
  return out;
}

int algebraic_degree(const BooleanFunc& f) {
  int d = 0;
  for (uint32_t m : f.anf()) d = std::max(d, std::popcount(m));
  return d;
}

bool is_balanced(const BooleanFunc& f) {
  const size_t ones = static_cast<size_t>(std::count(f.truth_table().begin(), f.truth_table().end(), 1));
  return 2 * ones == f.truth_table().size();
}

std::vector<int64_t> walsh_spectrum(const BooleanFunc& f) {
  const Bits& t = f.truth_table();
  std::vector<int64_t> w(t.size());
  for (size_t x = 0; x < t.size(); ++x) w[x] = t[x] ? -1 : 1;
  for (size_t step = 1; step < w.size(); step <<= 1) {
    for (size_t x = 0; x < w.size(); ++x) {
      if (x & step) continue;
      const int64_t a = w[x];
      const int64_t b = w[x | step];
      w[x] = a + b;
      w[x | step] = a - b;
    }
  }
  return w;
}

int64_t nonlinearity(const BooleanFunc& f) {
  int64_t peak = 0;
  for (int64_t v : walsh_spectrum(f)) peak = std::max(peak, v < 0 ? -v : v);
  return (int64_t{1} << f.arity()) / 2 - peak / 2;
}

int correlation_immunity(const BooleanFunc& f) {
  const std::vector<int64_t> w = walsh_spectrum(f);
  const int l = static_cast<int>(f.arity());
  int lowest = l + 1;
  for (size_t a = 1; a < w.size(); ++a) {
    if (w[a] != 0) lowest = std::min(lowest, std::popcount(a));
  }
  return std::min(lowest - 1, l);
}

std::vector<double> correlation_probabilities(const BooleanFunc& f) {
  std::vector<double> out;
  const Bits& t = f.truth_table();
  for (unsigned i = 0; i < f.arity(); ++i) {
    size_t agree = 0;
    for (size_t x = 0; x < t.size(); ++x) {
      if (t[x] == (x >> i & 1)) ++agree;
    }
    out.push_back(static_cast<double>(agree) / static_cast<double>(t.size()));
  }
  return out;
}

namespace {

bool has_annihilator(const std::vector<uint32_t>& points, const std::vector<uint32_t>& monomials) {
  if (points.empty()) return true;
  BitMatrix m(points.size(), monomials.size());
  for (size_t r = 0; r < points.size(); ++r) {
    for (size_t c = 0; c < monomials.size(); ++c) m.set(r, c, (points[r] & monomials[c]) == monomials[c]);
  }
  return m.rank() < monomials.size();
}

}  // namespace

int algebraic_immunity(const BooleanFunc& f) {
  if (f.arity() > 10) invalid("algebraic immunity is limited to 10 variables");
  const Bits& t = f.truth_table();
  if (std::all_of(t.begin(), t.end(), [&](uint8_t b) { return b == t[0]; })) return 0;
  std::vector<uint32_t> ones, zeros;
  for (size_t x = 0; x < t.size(); ++x) (t[x] ? ones : zeros).push_back(static_cast<uint32_t>(x));
  std::vector<uint32_t> monomials;
  for (int d = 0; d <= static_cast<int>(f.arity()); ++d) {
    for (size_t m = 0; m < t.size(); ++m) {
      if (std::popcount(m) == d) monomials.push_back(static_cast<uint32_t>(m));
    }
    // g f = 0 means g vanishes on the ones of f; g (f + 1) = 0 on its zeros.
    if (has_annihilator(ones, monomials) || has_annihilator(zeros, monomials)) return d;
  }
  return static_cast<int>(f.arity());
}

uint64_t evaluate_integer(const BooleanFunc& f, std::span<const uint64_t> values) {
  if (values.size() != f.arity()) invalid("one value per variable is required");
  uint64_t total = 0;
  for (uint32_t m : f.anf()) {
    uint64_t term = 1;
    for (unsigned i = 0; i < f.arity(); ++i) {
      if (m >> i & 1) term *= values[i];
    }
    total += term;
  }
  return total;
}

}  // namespace seqdft
