#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "seqdft/attack.hpp"
#include "seqdft/boolfn.hpp"
#include "seqdft/config.hpp"
#include "seqdft/crt.hpp"
#include "seqdft/error.hpp"
#include "seqdft/generators.hpp"
#include "seqdft/gfpoly.hpp"
#include "seqdft/lfsr.hpp"
#include "seqdft/spectra.hpp"

namespace seqdft::cli {

void Report::add(std::string key, std::string value) {
  if (value.find('\n') != std::string::npos) invalid("report value for '" + key + "' spans lines");
  entries_.emplace_back(std::move(key), std::move(value));
}

void Report::add(std::string key, long long value) { add(std::move(key), std::to_string(value)); }

void Report::add(std::string key, unsigned long long value) { add(std::move(key), std::to_string(value)); }

void Report::add(std::string key, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", value);
  add(std::move(key), std::string(buf));
}

std::string Report::machine() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + "=" + v + "\n";
  return out;
}

std::string Report::human() const {
  size_t width = 0;
  for (const auto& e : entries_) width = std::max(width, e.first.size());
  std::string out;
  if (!headline_.empty()) out += headline_ + "\n";
  for (const auto& [k, v] : entries_) out += k + ":" + std::string(width - k.size() + 1, ' ') + v + "\n";
  return out;
}

std::vector<std::pair<std::string, std::string>> parse_machine(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  size_t line_no = 0;
  while (!text.empty()) {
    const size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      fail(ErrorKind::Parse, "report line " + std::to_string(line_no) + ": expected key=value");
    }
    out.emplace_back(std::string(line.substr(0, eq)), std::string(line.substr(eq + 1)));
  }
  return out;
}

namespace {

template <typename T>
std::string join(const std::vector<T>& items, const char* sep = ",") {
  std::ostringstream os;
  for (size_t i = 0; i < items.size(); ++i) os << (i ? sep : "") << items[i];
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Bit string from the positional argument, --input FILE, or stdin.
Bits read_sequence(const std::string& seq, const std::string& input) {
  if (!seq.empty() && seq != "-") return parse_bits(seq);
  if (!input.empty()) return parse_bits(read_text_file(input));
  std::ostringstream os;
  os << std::cin.rdbuf();
  return parse_bits(os.str());
}

void add_complexity(Report& r, const ComplexityReport& c) {
  r.add("complexity.exhaustive", c.exhaustive);
  r.add("complexity.correlation", c.correlation);
  r.add("complexity.bm", c.bm);
  r.add("complexity.g_k", c.g_k_cost);
  r.add("complexity.evaluation", c.evaluation);
  r.add("complexity.preprocessing", c.preprocessing);
  r.add("complexity.filtering", c.filtering);
  r.add("complexity.solve", c.solve);
  r.add("complexity.states", c.state_cost);
  r.add("complexity.attack", c.attack);
}

std::string factor_list(const std::vector<Factor>& factors) {
  std::vector<std::string> parts;
  for (const Factor& f : factors) {
    parts.push_back(f.multiplicity == 1 ? f.poly.str() : "(" + f.poly.str() + ")^" + std::to_string(f.multiplicity));
  }
  return join(parts, " * ");
}

struct Options {
  bool machine = false;
  std::string config;
  std::string seq;
  std::string input;
  size_t count = 0;
  bool hex = false;
  unsigned degree = 0;
  std::string modulus;
  bool dense = false;
  std::string poly;
  std::vector<std::string> congruences;
  long long tau = 0;
  std::vector<unsigned long long> moduli;
  std::optional<unsigned long long> k;
  bool oracle = false;
};

Report cmd_gen(const Options& o) {
  const GeneratorSpec spec = load_generator_config(o.config);
  if (!spec.has_states() && spec.kind != GeneratorKind::A51) invalid("gen needs initial states for every LFSR");
  const Bits z = keystream(spec, o.count);
  Report r;
  r.add("kind", std::string(kind_name(spec.kind)));
  r.add("count", static_cast<unsigned long long>(z.size()));
  if (o.hex) {
    r.set_headline(pack_hex(z));
    r.add("keystream_hex", pack_hex(z));
  } else {
    r.set_headline(format_bits(z));
    r.add("keystream", format_bits(z));
  }
  return r;
}

Report cmd_dft(const Options& o) {
  Report r;
  std::optional<GeneratorSpec> spec;
  Bits bits;
  if (!o.config.empty()) {
    spec = load_generator_config(o.config);
    if (spec->kind != GeneratorKind::Combiner) invalid("dft --config expects a combiner generator");
    if (!spec->has_states()) spec = spec->with_reference_states();
  }
  if (!o.seq.empty() || !o.input.empty() || !spec) {
    bits = read_sequence(o.seq, o.input);
  } else {
    bits = combiner_keystream(*spec, combiner_period(*spec));
  }
  if (bits.empty()) invalid("dft needs a non-empty sequence");
  const PeriodicSeq s(bits);
  std::optional<Spectrum> spectrum;
  if (!o.modulus.empty()) {
    FieldPtr f = FieldCtx::create(BitPoly::parse(o.modulus));
    spectrum = dft(s, f, default_root(*f, s.period()));
  } else if (o.degree) {
    FieldPtr f = FieldCtx::standard(o.degree);
    spectrum = dft(s, f, default_root(*f, s.period()));
  } else if (spec && s.period() == combiner_period(*spec)) {
    const Spectrum reference = combiner_spectrum(*spec);
    spectrum = dft(s, reference.ctx_ptr(), reference.root());
  } else {
    spectrum = dft(s);
  }
  const size_t weight = spectral_weight(*spectrum);
  const BmResult bm = berlekamp_massey(PeriodicSeq(bits).window(0, 2 * bits.size()));
  r.set_headline(spectrum->sparse_str() + (spectrum->support().empty() ? "" : ", ") + "weight " + std::to_string(weight));
  r.add("n", static_cast<unsigned long long>(s.period()));
  r.add("field_degree", spectrum->ctx().m());
  r.add("modulus", spectrum->ctx().modulus().str());
  r.add("root", spectrum->ctx().format(spectrum->root()));
  r.add("weight", static_cast<unsigned long long>(weight));
  r.add("linear_complexity", bm.L);
  r.add("support", join(spectrum->support()));
  r.add("spectrum", spectrum->machine_str());
  if (o.dense) r.add("dense", spectrum->dense_str());
  if (spec) {
    const auto predicted = predicted_combiner_support(*spec);
    r.add("predicted_support", join(predicted));
    r.add("support_match", predicted == spectrum->support());
  }
  return r;
}

Report cmd_bm(const Options& o) {
  const Bits bits = read_sequence(o.seq, o.input);
  const BmResult bm = berlekamp_massey(bits);
  Report r;
  r.set_headline(bm.poly.str() + ", L = " + std::to_string(bm.L));
  r.add("length", static_cast<unsigned long long>(bits.size()));
  r.add("L", bm.L);
  r.add("poly", bm.poly.str());
  r.add("poly_hex", bm.poly.hex());
  return r;
}

Report cmd_factor(const Options& o) {
  const BitPoly f = BitPoly::parse(o.poly);
  if (f.degree() < 1) invalid("factor needs a polynomial of degree at least 1");
  const auto factors = factorize(f);
  Report r;
  r.set_headline(factor_list(factors));
  r.add("poly", f.str());
  r.add("degree", f.degree());
  const bool irreducible = is_irreducible(f);
  r.add("irreducible", irreducible);
  r.add("primitive", irreducible && f.degree() <= 64 && is_primitive(f));
  r.add("factor_count", static_cast<unsigned long long>(factors.size()));
  for (size_t i = 0; i < factors.size(); ++i) {
    const std::string p = "factor." + std::to_string(i + 1);
    r.add(p, factors[i].poly.str());
    r.add(p + ".multiplicity", factors[i].multiplicity);
    if (factors[i].poly.coeff(0) && factors[i].poly.degree() <= 64) {
      r.add(p + ".root_order", static_cast<unsigned long long>(poly_root_order(factors[i].poly)));
    }
  }
  return r;
}

int64_t parse_int(const std::string& text, const std::string& what) {
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size()) fail(ErrorKind::Parse, "bad " + what + " '" + text + "'");
  return v;
}

Report cmd_crt_solve(const Options& o) {
  std::vector<Congruence> cs;
  for (const std::string& item : o.congruences) {
    const size_t colon = item.find(':');
    if (colon == std::string::npos) fail(ErrorKind::Parse, "expected residue:modulus, got '" + item + "'");
    const int64_t m = parse_int(item.substr(colon + 1), "modulus");
    if (m <= 0) invalid("modulus must be positive in '" + item + "'");
    cs.push_back({parse_int(item.substr(0, colon), "residue"), static_cast<uint64_t>(m)});
  }
  const CrtSolution sol = crt_solve(cs);
  Report r;
  r.set_headline(std::to_string(sol.value) + " (mod " + std::to_string(sol.modulus) + ")");
  r.add("value", static_cast<unsigned long long>(sol.value));
  r.add("modulus", static_cast<unsigned long long>(sol.modulus));
  return r;
}

Report cmd_crt_split(const Options& o) {
  std::vector<uint64_t> moduli(o.moduli.begin(), o.moduli.end());
  const auto residues = crt_split(o.tau, moduli);
  Report r;
  r.set_headline(join(residues, " "));
  r.add("tau", static_cast<long long>(o.tau));
  r.add("moduli", join(moduli));
  r.add("residues", join(residues));
  return r;
}

void add_function_metrics(Report& r, const BooleanFunc& f) {
  r.add("function", f.anf_str());
  r.add("function.arity", f.arity());
  r.add("function.truth_table", f.truth_table_str());
  r.add("function.degree", algebraic_degree(f));
  r.add("function.balanced", is_balanced(f));
  r.add("function.nonlinearity", static_cast<long long>(nonlinearity(f)));
  r.add("function.correlation_immunity", correlation_immunity(f));
  if (f.arity() <= 10) r.add("function.algebraic_immunity", algebraic_immunity(f));
  std::vector<std::string> probs;
  for (double p : correlation_probabilities(f)) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", p);
    probs.emplace_back(buf);
  }
  r.add("function.p_agree", join(probs));
}

Report cmd_analyze(const Options& o) {
  GeneratorSpec spec = load_generator_config(o.config);
  Report r;
  r.add("kind", std::string(kind_name(spec.kind)));
  if (spec.kind == GeneratorKind::A51) {
    A51 a;
    a.setup(spec.key, spec.frame);
    const Bits z = a.keystream();
    const auto& c = a.counters();
    r.add("a51.load_cycles", c.load_cycles);
    r.add("a51.mix_cycles", c.mix_cycles);
    r.add("a51.output_cycles", c.output_cycles);
    for (size_t i = 0; i < 3; ++i) {
      r.add("a51.clock_rate." + std::to_string(i + 1),
            static_cast<double>(c.register_clocks[i] - c.load_cycles) / static_cast<double>(c.majority_cycles));
    }
    r.add("a51.keystream_hex", pack_hex(z));
    return r;
  }
  if (!spec.has_states()) spec = spec.with_reference_states();
  add_function_metrics(r, *spec.func);
  std::vector<std::string> polys;
  for (const LfsrSpec& l : spec.lfsrs) polys.push_back(l.poly.str());
  r.add("lfsrs", join(polys, " ; "));
  r.add("periods", join(spec.periods()));
  const LcBoundsReport lc = lc_bounds_check(spec);
  r.add("lc.components", join(lc.component_L));
  r.add("lc.predicted", static_cast<unsigned long long>(lc.predicted));
  if (lc.lower_bound) r.add("lc.lower_bound", static_cast<unsigned long long>(lc.lower_bound));
  r.add("lc.measured", lc.measured);
  r.add("lc.within_bounds", lc.within_bounds);
  r.add("lc.equals_prediction", lc.equals_prediction);
  if (spec.kind == GeneratorKind::Combiner) {
    const uint64_t n = combiner_period(spec);
    r.add("period", static_cast<unsigned long long>(n));
    const Bits one = combiner_keystream(spec, n);
    const BmResult bm = berlekamp_massey(PeriodicSeq(one).window(0, 2 * n));
    r.add("min_poly", bm.poly.str());
    r.add("min_poly.degree", bm.poly.degree());
    r.add("min_poly.factors", factor_list(factorize(bm.poly)));
    add_complexity(r, complexity_report(spec));
  }
  return r;
}

Report cmd_attack(const Options& o) {
  const GeneratorSpec spec = load_generator_config(o.config);
  const Bits z = read_sequence(o.seq, o.input);
  std::optional<uint64_t> k;
  if (o.k) k = *o.k;
  const AttackContext ctx = precompute(spec, k);
  const AttackResult res = run_attack(ctx, z);
  Report r;
  std::vector<std::string> states;
  for (const Bits& s : res.states) states.push_back(format_bits(s));
  r.set_headline("tau = " + std::to_string(res.tau) + ", states " + join(states, " / "));
  r.add("g", ctx.g.str());
  r.add("L", ctx.L);
  r.add("factors", factor_list(ctx.factors));
  r.add("k", static_cast<unsigned long long>(ctx.k));
  r.add("g_k", ctx.g_k.str());
  r.add("q", ctx.q.str());
  r.add("decimated_prefix", format_bits(ctx.decimated_prefix));
  r.add("g_k_decimation", ctx.g_k_decimation.str());
  for (size_t j = 0; j < res.stages.size(); ++j) {
    const std::string p = "stage." + std::to_string(j + 1);
    r.add(p + ".factor", res.stages[j].factor.str());
    r.add(p + ".root_order", static_cast<unsigned long long>(res.stages[j].root_order));
    r.add(p + ".k", static_cast<unsigned long long>(res.stages[j].k));
    r.add(p + ".tau_mod", static_cast<unsigned long long>(res.stages[j].tau_mod));
  }
  r.add("tau", static_cast<unsigned long long>(res.tau));
  r.add("tau_i", join(res.tau_i));
  for (size_t i = 0; i < states.size(); ++i) r.add("state." + std::to_string(i + 1), states[i]);
  r.add("bits_used", static_cast<unsigned long long>(res.bits_used));
  r.add("bits_observed", static_cast<unsigned long long>(z.size()));
  r.add("verified", true);
  if (o.oracle) {
    const auto matches = exhaustive_oracle(spec, z);
    r.add("oracle.matches", static_cast<unsigned long long>(matches.size()));
    r.add("oracle.agrees", std::find(matches.begin(), matches.end(), res.states) != matches.end());
  }
  add_complexity(r, complexity_report(ctx));
  return r;
}

Report cmd_complexity(const Options& o) {
  const GeneratorSpec spec = load_generator_config(o.config);
  const ComplexityReport c = complexity_report(spec);
  Report r;
  r.add("lfsr_count", c.lfsr_count);
  r.add("L", c.L);
  r.add("deg_g_k", c.deg_g_k);
  add_complexity(r, c);
  return r;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Inapplicable:
      return kExitInapplicable;
    case ErrorKind::Inconsistent:
      return kExitInconsistent;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-field DFT analysis of LFSR keystream generators", "seqdft"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("-m,--machine", o.machine, "key=value output");

  auto* gen = app.add_subcommand("gen", "Generate keystream bits from a config");
  gen->add_option("-c,--config", o.config, "Generator config")->required();
  gen->add_option("-n,--count", o.count, "Number of bits")->required();
  gen->add_flag("--hex", o.hex, "Packed hex output (MSB first)");

  auto* dftc = app.add_subcommand("dft", "Finite-field DFT of one period of a sequence");
  dftc->add_option("sequence", o.seq, "Bit string (or '-' for stdin)");
  dftc->add_option("-i,--input", o.input, "File holding the bit string");
  dftc->add_option("-c,--config", o.config, "Combiner config: transform its keystream and compare with the CRT prediction");
  dftc->add_option("--degree", o.degree, "Field degree m of GF(2^m)");
  dftc->add_option("--modulus", o.modulus, "Primitive field modulus");
  dftc->add_flag("--dense", o.dense, "Also list every component");

  auto* bmc = app.add_subcommand("bm", "Berlekamp-Massey linear complexity");
  bmc->add_option("sequence", o.seq, "Bit string (or '-' for stdin)");
  bmc->add_option("-i,--input", o.input, "File holding the bit string");

  auto* fac = app.add_subcommand("factor", "Factor a polynomial over GF(2)");
  fac->add_option("poly", o.poly, "Polynomial, e.g. x^6+x^4+x^2+x+1 or 0x57")->required();

  auto* crt = app.add_subcommand("crt", "Chinese remainder computations");
  crt->require_subcommand(1);
  auto* solve = crt->add_subcommand("solve", "Combine residue:modulus pairs");
  solve->add_option("congruences", o.congruences, "e.g. 1:3 3:7 15:31")->required();
  auto* split = crt->add_subcommand("split", "Reduce tau by each modulus");
  split->add_option("tau", o.tau, "Shift")->required();
  split->add_option("moduli", o.moduli, "Moduli")->required();

  auto* analyze = app.add_subcommand("analyze", "Function metrics, linear complexity bounds and attack costs");
  analyze->add_option("-c,--config", o.config, "Generator config")->required();

  auto* attack = app.add_subcommand("attack", "Recover initial states of a combiner from keystream bits");
  attack->add_option("-c,--config", o.config, "Generator config (states may be '?')")->required();
  attack->add_option("keystream", o.seq, "Observed bits (or '-' for stdin)");
  attack->add_option("-i,--input", o.input, "File holding the observed bits");
  attack->add_option("-k", o.k, "Decimation exponent");
  attack->add_flag("--oracle", o.oracle, "Cross-check with exhaustive search");

  auto* comp = app.add_subcommand("complexity", "Operation-count estimates");
  comp->add_option("-c,--config", o.config, "Generator config")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Report r;
    if (gen->parsed()) {
      r = cmd_gen(o);
    } else if (dftc->parsed()) {
      r = cmd_dft(o);
    } else if (bmc->parsed()) {
      r = cmd_bm(o);
    } else if (fac->parsed()) {
      r = cmd_factor(o);
    } else if (solve->parsed()) {
      r = cmd_crt_solve(o);
    } else if (split->parsed()) {
      r = cmd_crt_split(o);
    } else if (analyze->parsed()) {
      r = cmd_analyze(o);
    } else if (attack->parsed()) {
      r = cmd_attack(o);
    } else {
      r = cmd_complexity(o);
    }
    out << (o.machine ? r.machine() : r.human());
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace seqdft::cli
