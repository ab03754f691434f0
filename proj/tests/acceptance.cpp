// Acceptance report: one PASS/FAIL line per criterion, exit status 1 when
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "seqdft/attack.hpp"
#include "seqdft/config.hpp"
#include "seqdft/crt.hpp"
#include "seqdft/error.hpp"
#include "seqdft/generators.hpp"
#include "seqdft/gfpoly.hpp"
#include "seqdft/spectra.hpp"

using namespace seqdft;

namespace {

GeneratorSpec fixture(const std::string& name) {
  return load_generator_config(std::string(SEQDFT_FIXTURE_DIR) + "/" + name);
}

PeriodicSeq full_period(const GeneratorSpec& spec) { return PeriodicSeq(keystream(spec, combiner_period(spec))); }

// Index of the first rotation u = s.rotate(r), by direct comparison.
std::optional<int64_t> brute_rotation(const Bits& s, const Bits& u) {
  const size_t n = s.size();
  for (size_t r = 0; r < n; ++r) {
    bool ok = true;
    for (size_t t = 0; t < n && ok; ++t) ok = u[t] == s[(t + r) % n];
    if (ok) return static_cast<int64_t>(r);
  }
  return std::nullopt;
}

uint64_t least_period(const PeriodicSeq& s) {
  for (uint64_t p = 1; p < s.period(); ++p) {
    if (s.period() % p == 0 && s.rotate(static_cast<int64_t>(p)) == s) return p;
  }
  return s.period();
}

bool exponents_are(const Spectrum& sp, const std::vector<std::pair<size_t, uint64_t>>& expected) {
  for (size_t k = 0; k < sp.n(); ++k) {
    auto it = std::find_if(expected.begin(), expected.end(), [&](const auto& e) { return e.first == k; });
    const auto e = sp.exponent(k);
    if (it == expected.end()) {
      if (e.has_value()) return false;
    } else if (!e || *e != it->second) {
      return false;
    }
  }
  return true;
}

bool conjugate_closed(const Spectrum& sp) {
  const FieldCtx& f = sp.ctx();
  for (size_t k = 0; k < sp.n(); ++k) {
    if (sp[(2 * k) % sp.n()] != f.sqr(sp[k])) return false;
  }
  return true;
}

bool criterion1(std::string& detail) {
  const Spectrum m = dft(lfsr_sequence(BitPoly::parse("x^3+x+1"), parse_bits("001")));
  const bool m_ok = exponents_are(m, {{3, 4}, {5, 2}, {6, 1}});
  const Spectrum p = combiner_spectrum(fixture("example1.cfg"));
  const bool p_ok = p.support() == std::vector<uint64_t>{5, 10, 13, 17, 19, 20} &&
                    exponents_are(p, {{5, 9}, {10, 18}, {13, 15}, {17, 18}, {19, 9}, {20, 15}});
  detail = m.sparse_str() + " | " + p.sparse_str();
  return m_ok && p_ok;
}

bool criterion2(std::string& detail) {
  const GeneratorSpec spec = fixture("example1.cfg").with_reference_states();
  const std::vector<uint64_t> moduli = {3, 7};
  const Bits ref = keystream(spec, 21);
  int good = 0;
  for (int64_t k1 = 0; k1 < 3; ++k1) {
    for (int64_t k2 = 0; k2 < 7; ++k2) {
      std::vector<Bits> states;
      for (int i = 0; i < 2; ++i) {
        const LfsrSpec& l = spec.lfsrs[i];
        const PeriodicSeq comp = lfsr_sequence(l.poly, *l.state);
        states.push_back(comp.window(i == 0 ? k1 : k2, static_cast<size_t>(l.poly.degree())));
      }
      const Bits shifted = keystream(spec.with_states(states), 21);
      const std::vector<int64_t> shifts = {k1, k2};
      const auto observed = brute_rotation(ref, shifted);
      if (observed && static_cast<uint64_t>(*observed) == product_shift(shifts, moduli)) ++good;
    }
  }
  const std::vector<Congruence> a = {{1, 3}, {0, 7}};
  const std::vector<Congruence> b = {{1, 3}, {3, 7}};
  const std::vector<Congruence> c = {{1, 3}, {3, 7}, {15, 31}};
  const uint64_t va = crt_solve(a).value, vb = crt_solve(b).value, vc = crt_solve(c).value;
  detail = std::to_string(good) + "/21 shift pairs, instances " + std::to_string(va) + " " + std::to_string(vb) + " " +
           std::to_string(vc);
  return good == 21 && va == 7 && vb == 10 && vc == 325;
}

bool criterion3(std::string& detail) {
  const GeneratorSpec base = fixture("example2.cfg");
  struct Product {
    const char* anf;
    int degree;
    uint64_t period;
  };
  const std::vector<Product> products = {
      {"a1*a2", 6, 21}, {"a1*a3", 10, 93}, {"a2*a3", 15, 217}, {"a1*a2*a3", 30, 651}};
  bool ok = true;
  for (const Product& p : products) {
    GeneratorSpec spec = base;
    spec.func = BooleanFunc::parse_anf(p.anf, 3);
    const PeriodicSeq one(keystream(spec, 651));
    const BmResult bm = berlekamp_massey(one.window(0, 1302));
    const uint64_t period = least_period(one);
    ok = ok && bm.L == p.degree && period == p.period;
    detail += std::string(p.anf) + ":" + std::to_string(bm.L) + "/" + std::to_string(period) + " ";
  }
  const PeriodicSeq z = full_period(base);
  const BmResult bm = berlekamp_massey(z.window(0, 1302));
  const auto factors = factorize(bm.poly);
  const bool g_ok = bm.L == 31 && factors.size() == 3 && factors[0].poly.degree() == 6 &&
                    factors[1].poly.degree() == 10 && factors[2].poly.degree() == 15;
  const bool support_ok = predicted_combiner_support(base) == combiner_spectrum(base).support();
  detail += "z:" + std::to_string(bm.L) + (support_ok ? " supports equal" : " supports differ");
  return ok && g_ok && support_ok;
}

bool criterion4(std::string& detail) {
  const AttackContext ctx = precompute(fixture("example3_public.cfg"));
  const AttackResult r = run_attack(ctx, parse_bits("1011110001111010111001011010111"));
  detail = "k = " + std::to_string(ctx.k) + ", g_k = " + ctx.g_k.str() + ", q = " + ctx.q.str() +
           ", tau = " + std::to_string(r.tau) + ", states";
  for (const Bits& s : r.states) detail += " " + format_bits(s);
  return ctx.k == 58 && ctx.g_k == BitPoly::parse("x^6+x^4+x^2+x+1") &&
         ctx.q == BitPoly::parse("x^25+x^22+x^19+x^17+x^10+x^9+x^8+x^5+1") && r.tau == 19 &&
         r.states == std::vector<Bits>{parse_bits("10"), parse_bits("101"), parse_bits("01111")};
}

bool criterion5(std::string& detail) {
  const GeneratorSpec pub = fixture("example3_public.cfg");
  const AttackContext ctx = precompute(pub);
  std::mt19937_64 rng(2024);
  int agree = 0;
  for (int i = 0; i < 100; ++i) {
    std::vector<Bits> states;
    for (unsigned m : pub.lengths()) {
      Bits s(m, 0);
      while (std::count(s.begin(), s.end(), 1) == 0) {
        for (auto& b : s) b = static_cast<uint8_t>(rng() & 1);
      }
      states.push_back(s);
    }
    const Bits z = keystream(pub.with_states(states), 31);
    const AttackResult r = run_attack(ctx, z);
    const auto matches = exhaustive_oracle(pub, z);
    if (matches.size() == 1 && matches[0] == r.states && keystream(pub.with_states(r.states), 31) == z) ++agree;
  }
  detail = std::to_string(agree) + "/100 keys agree with the exhaustive search";
  return agree == 100;
}

bool criterion6(std::string& detail) {
  std::vector<PeriodicSeq> seqs = {full_period(fixture("example1.cfg")), full_period(fixture("example2.cfg")),
                                   full_period(fixture("example3.cfg")),
                                   PeriodicSeq(keystream(fixture("filter.cfg"), 127)),
                                   lfsr_sequence(BitPoly::parse("x^3+x+1"), parse_bits("001"))};
  std::mt19937_64 rng(6);
  for (int i = 0; i < 10; ++i) {
    Bits b(21);
    for (auto& x : b) x = static_cast<uint8_t>(rng() & 1);
    seqs.emplace_back(b);
  }
  int failures = 0;
  for (const PeriodicSeq& s : seqs) {
    const Spectrum sp = dft(s);
    const BmResult bm = berlekamp_massey(s.window(0, 2 * s.period()));
    if (spectral_weight(sp) != static_cast<size_t>(bm.L)) ++failures;
    if (idft(sp).bits() != s.bits()) ++failures;
    if (!conjugate_closed(sp)) ++failures;
    if (s.period() == 21) {
      for (int64_t tau = 0; tau < 21; ++tau) {
        const Spectrum rotated = dft(s.rotate(tau), sp.ctx_ptr(), sp.root());
        if (!(rotated == shift_spectrum(sp, tau)) || !conjugate_closed(rotated)) ++failures;
      }
    }
  }
  const GeneratorSpec ex2 = fixture("example2.cfg");
  const PeriodicSeq s = full_period(ex2);
  const Spectrum sp = combiner_spectrum(ex2);
  const FieldCtx& f = sp.ctx();
  for (const char* text : {"x^25+x^22+x^19+x^17+x^10+x^9+x^8+x^5+1", "x^6+x^4+x^2+x+1", "x^3+1"}) {
    const BitPoly q = BitPoly::parse(text);
    const Spectrum z = dft(lti_filter(s, q), sp.ctx_ptr(), sp.root());
    for (size_t k = 0; k < 651; ++k) {
      const Word gain = poly_eval(f, q, f.pow(sp.root(), -static_cast<int64_t>(k)));
      if (z[k] != f.mul(gain, sp[k])) ++failures;
    }
    if (!conjugate_closed(z)) ++failures;
  }
  int bound_failures = 0;
  for (const char* name : {"example1.cfg", "example2.cfg", "example3.cfg", "filter.cfg"}) {
    if (!lc_bounds_check(fixture(name)).within_bounds) ++bound_failures;
  }
  detail = std::to_string(seqs.size()) + " sequences, " + std::to_string(failures) + " identity failures, " +
           std::to_string(bound_failures) + " bound failures";
  return failures == 0 && bound_failures == 0;
}

bool criterion7(std::string& detail) {
  const ComplexityReport c = complexity_report(fixture("example3_public.cfg"));
  char buf[256];
  std::snprintf(buf, sizeof buf, "exhaustive %.3f (512), correlation %.3f (21), preprocessing %.3f (279 +- 1), "
                "attack %.3f (150 +- 1)", c.exhaustive, c.correlation, c.preprocessing, c.attack);
  detail = buf;
  return c.exhaustive == 512.0 && c.correlation == 21.0 && std::fabs(c.preprocessing - 279.0) <= 1.0 &&
         std::fabs(c.attack - 150.0) <= 1.0;
}

bool criterion8(std::string& detail) {
  const GeneratorSpec spec = fixture("a51.cfg");
  A51 a;
  a.setup(spec.key, spec.frame);
  const A51::Counters& c0 = a.counters();
  const bool phases = c0.load_cycles == 86 && c0.mix_cycles == 100;
  const Bits z = a.keystream();
  const bool output = a.counters().output_cycles == 228 && z.size() == 228;
  bool threw = false;
  try {
    a.next_bit();
  } catch (const Error&) {
    threw = true;
  }
  A51 b;
  b.setup(spec.key, spec.frame);
  const auto before = b.counters().register_clocks;
  for (int i = 0; i < 10000; ++i) b.clock_majority();
  bool rates_ok = true;
  char buf[160];
  std::string rates;
  for (size_t r = 0; r < 3; ++r) {
    const double rate = static_cast<double>(b.counters().register_clocks[r] - before[r]) / 10000.0;
    rates_ok = rates_ok && std::fabs(rate - 0.75) <= 0.02;
    std::snprintf(buf, sizeof buf, "%s%.4f", r ? " " : "", rate);
    rates += buf;
  }
  const bool vector_ok = pack_hex(z) == "534EAA582FE8151AB6E1855A728C093F4D68D757ED949B4CBE41B7C6B0";
  detail = "cycles " + std::to_string(c0.load_cycles) + "/" + std::to_string(c0.mix_cycles) + "/" +
           std::to_string(a.counters().output_cycles) + ", clock rates " + rates +
           (vector_ok ? ", regression vector ok" : ", regression vector differs");
  return phases && output && threw && rates_ok && vector_ok;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<bool(std::string&)>>> criteria = {
      {"spectrum fidelity", criterion1},      {"CRT shift theorem", criterion2},
      {"Example-2 reproduction", criterion3}, {"end-to-end attack", criterion4},
      {"oracle equivalence", criterion5},     {"property suites", criterion6},
      {"complexity echo", criterion7},        {"A5/1 simulator", criterion8},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = criteria[i].second(detail);
    } catch (const std::exception& e) {
      detail = std::string("error: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu (%s): %s [%.0f ms]\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                detail.c_str(), ms);
    failed += !ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
