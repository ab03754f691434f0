#include "seqdft/attack.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

#include "seqdft/crt.hpp"
#include "seqdft/error.hpp"
#include "seqdft/numtheory.hpp"
#include "seqdft/spectra.hpp"

namespace seqdft {

namespace {

constexpr uint64_t kMaxPeriod = uint64_t{1} << 24;

struct FactorInfo {
  BitPoly poly;
  unsigned degree = 0;
  uint64_t root_order = 0;
  FieldPtr field;
  Word rho = 0;
  bool usable = false;
};

FactorInfo describe_factor(const AttackContext& ctx, const BitPoly& f) {
  FactorInfo info;
  info.poly = f;
  info.degree = static_cast<unsigned>(f.degree());
  if (info.degree < 2 || info.degree > FieldCtx::kMaxDegree) return info;
  info.root_order = poly_root_order(f);
  info.field = FieldCtx::standard(info.degree);
  std::vector<BitPoly> covered;
  uint64_t product = 1;
  for (size_t i = 0; i < ctx.periods.size(); ++i) {
    if (info.root_order % ctx.periods[i] == 0) {
      covered.push_back(ctx.spec.lfsrs[i].poly);
      product *= ctx.periods[i];
    }
  }
  info.rho = product == info.root_order && !covered.empty() ? aligned_root(*info.field, covered)
                                                             : default_root(*info.field, info.root_order);
  info.usable = true;
  return info;
}

Bits decimated_prefix(const AttackContext& ctx, uint64_t k, size_t count) {
  Bits out(count);
  for (size_t t = 0; t < count; ++t) out[t] = ctx.ref_seq[static_cast<int64_t>(mulmod_u64(k, t, ctx.n))];
  return out;
}

bool admissible(const AttackContext& ctx, const FactorInfo& info, uint64_t k) {
  if (!info.usable || k == 0 || k >= ctx.n || gcd_u64(k, ctx.n) != 1) return false;
  const Word theta = info.field->pow(info.rho, static_cast<int64_t>(k % info.root_order));
  if (poly_eval(*info.field, info.poly, theta) != 0) return false;
  const Bits prefix = decimated_prefix(ctx, k, 2 * info.degree);
  return berlekamp_massey(prefix).poly == info.poly;
}

BitMatrix hankel(const Bits& seq, unsigned e) {
  BitMatrix m(e, e);
  for (unsigned r = 0; r < e; ++r) {
    for (unsigned c = 0; c < e; ++c) m.set(r, c, seq[r + c]);
  }
  return m;
}

// y(theta) for the solution y of M y = v, v the q-filtered window.
Word component_value(const AttackStage& st, const Bits& window) {
  Bits v(st.degree, 0);
  for (unsigned t = 0; t < st.degree; ++t) {
    uint8_t acc = 0;
    for (int i = 0; i <= st.q.degree(); ++i) {
      if (st.q.coeff(static_cast<unsigned>(i))) acc ^= window[t + static_cast<unsigned>(i)];
    }
    v[t] = acc;
  }
  bool unique = false;
  auto y = st.m.solve(v, &unique);
  if (!y || !unique) invalid("coefficient matrix for " + st.factor.str() + " is singular");
  Word acc = 0;
  for (unsigned i = st.degree; i-- > 0;) {
    acc = st.field->mul(acc, st.theta);
    if ((*y)[i]) acc ^= 1;
  }
  return acc;
}

AttackStage build_stage(const AttackContext& ctx, const FactorInfo& info, uint64_t k, bool decimation) {
  AttackStage st;
  st.factor = info.poly;
  st.degree = info.degree;
  st.root_order = info.root_order;
  st.q = poly_divexact(ctx.g, info.poly);
  st.field = info.field;
  st.rho = info.rho;
  st.k = k;
  st.theta = info.field->pow(info.rho, static_cast<int64_t>(k % info.root_order));
  if (poly_eval(*info.field, info.poly, st.theta) != 0) invalid("stage exponent does not give a root of " + info.poly.str());
  st.decimation_path = decimation;
  const size_t len = 2 * static_cast<size_t>(info.degree) - 1;
  if (decimation) {
    st.matrix_seq = decimated_prefix(ctx, k, len);
  } else {
    st.matrix_seq = Lfsr(info.poly, reference_state(info.degree)).run(len);
  }
  st.m = hankel(st.matrix_seq, info.degree);
  st.b_ref = component_value(st, ctx.ref_seq.window(0, static_cast<size_t>(ctx.L)));
  if (st.b_ref == 0) invalid("reference keystream has no component in " + info.poly.str());
  return st;
}

// Merges x = a (mod m) with x = b (mod d); false when they disagree.
bool merge_congruence(uint64_t& a, uint64_t& m, uint64_t b, uint64_t d) {
  const uint64_t g = gcd_u64(m, d);
  if ((a % g) != (b % g)) return false;
  const uint64_t l = m / g * d;
  const uint64_t m_g = m / g;
  const uint64_t d_g = d / g;
  // a + m t = b (mod d)  =>  t = ((b - a) / g) (m / g)^-1 (mod d / g).
  const uint64_t diff = reduce_mod(static_cast<int64_t>(b % d) - static_cast<int64_t>(a % d), d) / g;
  const uint64_t t = d_g == 1 ? 0 : mulmod_u64(diff % d_g, invmod_u64(m_g % d_g, d_g), d_g);
  a = static_cast<uint64_t>((static_cast<unsigned __int128>(m) * t + a) % l);
  m = l;
  return true;
}

ComplexityReport estimate(const std::vector<unsigned>& lengths, int L, int deg_g, int deg_g_k) {
  ComplexityReport r;
  r.lfsr_count = static_cast<unsigned>(lengths.size());
  r.L = L;
  r.deg_g_k = deg_g_k;
  unsigned total = 0;
  for (unsigned m : lengths) {
    total += m;
    r.correlation += std::ldexp(1.0, static_cast<int>(m) - 1);
  }
  r.exhaustive = std::ldexp(1.0, static_cast<int>(total) - 1);
  const double Ld = L;
  const double m = deg_g_k;
  const double N = deg_g;
  const double lg_m = m > 1 ? std::log2(m) : 0.0;
  const double eta = m > 2 ? m * lg_m * std::log2(lg_m) : 0.0;
  r.bm = Ld > 1 ? Ld * std::log2(Ld) : 0.0;
  r.g_k_cost = m * lg_m * lg_m;
  r.evaluation = N * eta + (N > 1 ? m * std::log2(N) : 0.0);
  r.preprocessing = r.bm + r.g_k_cost + r.evaluation;
  r.filtering = Ld;
  r.solve = std::pow(m, std::log2(7.0));
  r.state_cost = static_cast<double>(lengths.size());
  r.attack = r.filtering + r.solve + r.state_cost;
  return r;
}

}  // namespace

AttackContext precompute(const GeneratorSpec& spec, std::optional<uint64_t> k) {
  if (spec.kind != GeneratorKind::Combiner) invalid("the spectral attack targets combiner generators");
  spec.validate();
  for (const LfsrSpec& l : spec.lfsrs) {
    if (!is_irreducible(l.poly)) invalid("attack needs irreducible feedback, got " + l.poly.str());
  }
  AttackContext ctx;
  ctx.spec = spec;
  for (LfsrSpec& l : ctx.spec.lfsrs) l.state.reset();
  ctx.periods = spec.periods();
  ctx.n = combiner_period(spec);
  if (ctx.n > kMaxPeriod) invalid("keystream period " + std::to_string(ctx.n) + " is beyond the supported 2^24");
  ctx.ref_seq = PeriodicSeq(combiner_keystream(ctx.spec.with_reference_states(), ctx.n));

  std::vector<uint64_t> lengths;
  for (unsigned m : spec.lengths()) lengths.push_back(m);
  const uint64_t bound = evaluate_integer(*spec.func, lengths) + 1;
  const size_t window = static_cast<size_t>(std::min<uint64_t>(2 * bound, 2 * ctx.n));
  const BmResult bm = berlekamp_massey(ctx.ref_seq.window(0, window));
  ctx.g = bm.poly;
  ctx.L = bm.L;
  if (ctx.L == 0) fail(ErrorKind::Inapplicable, "keystream is identically zero");
  ctx.factors = factorize(ctx.g);
  if (ctx.factors.size() == 1 && ctx.factors[0].multiplicity == 1) {
    fail(ErrorKind::Inapplicable,
         "keystream minimal polynomial " + ctx.g.str() + " is irreducible: no proper factor to isolate (spectral immunity)");
  }
  for (const Factor& f : ctx.factors) {
    if (f.multiplicity > 1) fail(ErrorKind::Inapplicable, "keystream minimal polynomial has the repeated factor " + f.poly.str());
  }

  std::vector<FactorInfo> infos;
  for (const Factor& f : ctx.factors) infos.push_back(describe_factor(ctx, f.poly));

  const std::optional<uint64_t> pinned = k ? k : spec.attack_k;
  size_t primary = infos.size();
  uint64_t chosen = 0;
  if (pinned) {
    for (size_t j = 0; j < infos.size() && primary == infos.size(); ++j) {
      if (admissible(ctx, infos[j], *pinned)) {
        primary = j;
        chosen = *pinned;
      }
    }
    if (primary == infos.size()) {
      fail(ErrorKind::Inapplicable, "k = " + std::to_string(*pinned) + " is not admissible for any factor");
    }
  } else {
    for (size_t j = 0; j < infos.size() && primary == infos.size(); ++j) {
      if (!infos[j].usable) continue;
      for (uint64_t kk = 1; kk < ctx.n; ++kk) {
        if (admissible(ctx, infos[j], kk)) {
          primary = j;
          chosen = kk;
          break;
        }
      }
    }
    if (primary == infos.size()) fail(ErrorKind::Inapplicable, "no admissible k for any factor");
  }

  ctx.k = chosen;
  ctx.g_k = infos[primary].poly;
  ctx.q = poly_divexact(ctx.g, ctx.g_k);
  ctx.decimated_prefix = decimated_prefix(ctx, chosen, 2 * infos[primary].degree);
  ctx.g_k_decimation = berlekamp_massey(ctx.decimated_prefix).poly;
  ctx.stages.push_back(build_stage(ctx, infos[primary], chosen, true));

  uint64_t covered = infos[primary].root_order;
  for (size_t j = 0; j < infos.size() && covered != ctx.n; ++j) {
    if (j == primary || !infos[j].usable) continue;
    const uint64_t grown = lcm_u64(covered, infos[j].root_order);
    if (grown == covered) continue;
    uint64_t kk = 1;
    const FactorInfo& info = infos[j];
    while (kk < info.root_order) {
      if (gcd_u64(kk, info.root_order) == 1 &&
          poly_eval(*info.field, info.poly, info.field->pow(info.rho, static_cast<int64_t>(kk))) == 0) {
        break;
      }
      ++kk;
    }
    ctx.stages.push_back(build_stage(ctx, info, kk, false));
    covered = grown;
  }
  if (covered != ctx.n) {
    fail(ErrorKind::Inapplicable, "factors of the minimal polynomial do not determine the shift modulo " + std::to_string(ctx.n));
  }
  return ctx;
}

bool is_admissible(const AttackContext& ctx, size_t factor_index, uint64_t k) {
  if (factor_index >= ctx.factors.size()) invalid("factor index out of range");
  return admissible(ctx, describe_factor(ctx, ctx.factors[factor_index].poly), k);
}

std::vector<uint64_t> admissible_exponents(const AttackContext& ctx) {
  const FactorInfo info = describe_factor(ctx, ctx.g_k);
  std::vector<uint64_t> out;
  for (uint64_t k = 1; k < ctx.n; ++k) {
    if (admissible(ctx, info, k)) out.push_back(k);
  }
  return out;
}

uint64_t recover_tau(const AttackContext& ctx, const Bits& z, std::vector<StageReport>* reports) {
  if (z.size() < static_cast<size_t>(ctx.L)) {
    fail(ErrorKind::InsufficientData, "need at least " + std::to_string(ctx.L) + " keystream bits, got " + std::to_string(z.size()));
  }
  uint64_t tau = 0;
  uint64_t modulus = 1;
  for (const AttackStage& st : ctx.stages) {
    const Word b_obs = component_value(st, z);
    if (b_obs == 0) fail(ErrorKind::Inconsistent, "keystream has no component in " + st.factor.str());
    const FieldCtx& f = *st.field;
    const Word ratio = f.div(st.b_ref, b_obs);
    const uint64_t kinv = invmod_u64(st.k % st.root_order, st.root_order);
    const Word beta = f.pow(ratio, static_cast<int64_t>(kinv));
    uint64_t t = 0;
    if (!subgroup_log(f, st.rho, st.root_order, beta, t)) {
      fail(ErrorKind::Inconsistent, "component phase for " + st.factor.str() + " is not a power of the root");
    }
    if (!merge_congruence(tau, modulus, t, st.root_order)) {
      fail(ErrorKind::Inconsistent, "stage shifts disagree");
    }
    if (reports) reports->push_back({st.factor, st.root_order, st.k, t});
  }
  if (modulus != ctx.n) invalid("stages do not cover the keystream period");
  for (size_t t = 0; t < z.size(); ++t) {
    if (z[t] != ctx.ref_seq[static_cast<int64_t>(t) - static_cast<int64_t>(tau)]) {
      fail(ErrorKind::Inconsistent, "keystream bit " + std::to_string(t) + " contradicts the recovered shift");
    }
  }
  return tau;
}

namespace {

// Initial state of a register whose output is its reference sequence
// delayed by shift: via Tr(B alpha^(t - shift)) for primitive feedback,
// else by rotating the reference sequence.
Bits delayed_state(const BitPoly& poly, uint64_t shift) {
  const unsigned m = static_cast<unsigned>(poly.degree());
  const Bits ref = Lfsr(poly, reference_state(m)).run(m);
  if (m >= 2 && m <= FieldCtx::kMaxDegree && is_primitive(poly)) {
    FieldPtr field = FieldCtx::create(poly);
    BitMatrix tr(m, m);
    for (unsigned t = 0; t < m; ++t) {
      for (unsigned j = 0; j < m; ++j) tr.set(t, j, field->trace(field->mul(Word{1} << j, field->exp(t))) != 0);
    }
    bool unique = false;
    auto coords = tr.solve(ref, &unique);
    if (!coords || !unique) invalid("trace system for " + poly.str() + " is singular");
    Word b = 0;
    for (unsigned j = 0; j < m; ++j) {
      if ((*coords)[j]) b |= Word{1} << j;
    }
    const Word beta = field->mul(b, field->exp(-static_cast<int64_t>(shift)));
    return trace_sequence(field->element(beta), m);
  }
  return lfsr_sequence(poly, reference_state(m)).window(-static_cast<int64_t>(shift), m);
}

}  // namespace

AttackResult recover_states(const AttackContext& ctx, uint64_t tau) {
  AttackResult r;
  r.tau = tau % ctx.n;
  r.tau_i = crt_split(static_cast<int64_t>(r.tau), ctx.periods);
  for (size_t i = 0; i < ctx.spec.lfsrs.size(); ++i) r.states.push_back(delayed_state(ctx.spec.lfsrs[i].poly, r.tau_i[i]));
  r.bits_used = static_cast<size_t>(ctx.L);
  return r;
}

AttackResult run_attack(const AttackContext& ctx, const Bits& z) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  std::vector<StageReport> stages;
  const uint64_t tau = recover_tau(ctx, z, &stages);
  const auto t1 = clock::now();
  AttackResult r = recover_states(ctx, tau);
  const auto t2 = clock::now();
  r.stages = std::move(stages);
  r.tau_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  r.states_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
  const Bits again = combiner_keystream(ctx.spec.with_states(r.states), z.size());
  if (again != z) fail(ErrorKind::Inconsistent, "re-synthesized keystream differs from the observed bits");
  return r;
}

std::vector<std::vector<Bits>> exhaustive_oracle(const GeneratorSpec& spec, const Bits& z) {
  if (spec.kind != GeneratorKind::Combiner) invalid("exhaustive search targets combiner generators");
  spec.validate();
  if (z.empty()) invalid("exhaustive search needs keystream bits");
  unsigned total = 0;
  for (unsigned m : spec.lengths()) total += m;
  if (total > 24) invalid("exhaustive search is limited to 24 state bits in total");
  const size_t w = z.size();
  const size_t l = spec.lfsrs.size();
  // outputs[i][s - 1] is the window emitted from packed state s.
  std::vector<std::vector<Bits>> outputs(l);
  for (size_t i = 0; i < l; ++i) {
    const unsigned m = static_cast<unsigned>(spec.lfsrs[i].poly.degree());
    for (uint64_t s = 1; s < (uint64_t{1} << m); ++s) {
      Bits st(m);
      for (unsigned b = 0; b < m; ++b) st[b] = static_cast<uint8_t>(s >> b & 1);
      outputs[i].push_back(Lfsr(spec.lfsrs[i].poly, st).run(w));
    }
  }
  const BooleanFunc& f = *spec.func;
  auto search = [&](size_t first_begin, size_t first_end, std::vector<std::vector<uint64_t>>& found) {
    std::vector<size_t> idx(l, 0);
    idx[0] = first_begin;
    while (idx[0] < first_end) {
      bool ok = true;
      for (size_t t = 0; t < w && ok; ++t) {
        uint32_t x = 0;
        for (size_t i = 0; i < l; ++i) x |= static_cast<uint32_t>(outputs[i][idx[i]][t]) << i;
        ok = f.evaluate_mask(x) == z[t];
      }
      if (ok) {
        std::vector<uint64_t> hit;
        for (size_t i = 0; i < l; ++i) hit.push_back(idx[i] + 1);
        found.push_back(std::move(hit));
      }
      size_t i = l - 1;
      while (true) {
        if (++idx[i] < outputs[i].size() || i == 0) break;
        idx[i] = 0;
        --i;
      }
    }
  };
  const size_t firsts = outputs[0].size();
  const size_t workers = std::max<size_t>(1, std::min<size_t>(std::thread::hardware_concurrency(), firsts));
  std::vector<std::vector<std::vector<uint64_t>>> partial(workers);
  std::vector<std::thread> pool;
  for (size_t wkr = 0; wkr < workers; ++wkr) {
    const size_t b = firsts * wkr / workers;
    const size_t e = firsts * (wkr + 1) / workers;
    pool.emplace_back([&, b, e, wkr] { search(b, e, partial[wkr]); });
  }
  for (auto& th : pool) th.join();
  std::vector<std::vector<Bits>> out;
  for (const auto& part : partial) {
    for (const auto& hit : part) {
      std::vector<Bits> states;
      for (size_t i = 0; i < l; ++i) {
        const unsigned m = static_cast<unsigned>(spec.lfsrs[i].poly.degree());
        Bits st(m);
        for (unsigned b = 0; b < m; ++b) st[b] = static_cast<uint8_t>(hit[i] >> b & 1);
        states.push_back(std::move(st));
      }
      out.push_back(std::move(states));
    }
  }
  if (out.empty()) fail(ErrorKind::Inconsistent, "no initial states reproduce the keystream");
  return out;
}

ComplexityReport complexity_report(const AttackContext& ctx) {
  return estimate(ctx.spec.lengths(), ctx.L, ctx.g.degree(), ctx.g_k.degree());
}

ComplexityReport complexity_report(const GeneratorSpec& spec) {
  try {
    return complexity_report(precompute(spec));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Inapplicable) throw;
  }
  GeneratorSpec ref = spec;
  for (LfsrSpec& l : ref.lfsrs) l.state.reset();
  const uint64_t n = combiner_period(ref);
  const PeriodicSeq seq(combiner_keystream(ref.with_reference_states(), std::min<uint64_t>(n, kMaxPeriod)));
  const BmResult bm = berlekamp_massey(seq.window(0, 2 * seq.period()));
  return estimate(spec.lengths(), bm.L, bm.poly.degree(), bm.poly.degree());
}

}  // namespace seqdft
