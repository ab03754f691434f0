#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seqdft/attack.hpp"
#include "seqdft/boolfn.hpp"
#include "seqdft/config.hpp"
#include "seqdft/crt.hpp"
#include "seqdft/error.hpp"
#include "seqdft/generators.hpp"
#include "seqdft/gfpoly.hpp"
#include "seqdft/spectra.hpp"

namespace py = pybind11;
using namespace seqdft;

namespace {

PyObject* error_types[5] = {};

py::dict spectrum_dict(const Spectrum& s) {
  py::dict d;
  d["n"] = s.n();
  d["field_degree"] = s.ctx().m();
  d["modulus"] = s.ctx().modulus().str();
  d["root"] = s.ctx().format(s.root());
  d["support"] = s.support();
  d["weight"] = spectral_weight(s);
  py::dict values;
  for (uint64_t k : s.support()) values[py::int_(k)] = *s.exponent(k);
  d["exponents"] = values;
  d["text"] = s.sparse_str();
  return d;
}

std::vector<std::string> format_states(const std::vector<Bits>& states) {
  std::vector<std::string> out;
  for (const Bits& b : states) out.push_back(format_bits(b));
  return out;
}

}  // namespace

PYBIND11_MODULE(_seqdft, m) {
  m.doc() = "Finite-field DFT analysis of LFSR keystream generators";

  // Exception types live for the life of the interpreter.
  auto* base = new py::exception<Error>(m, "SeqdftError", PyExc_ValueError);
  error_types[static_cast<int>(ErrorKind::InvalidArgument)] = base->ptr();
  error_types[static_cast<int>(ErrorKind::Parse)] = (new py::exception<Error>(m, "ParseError", *base))->ptr();
  error_types[static_cast<int>(ErrorKind::Inapplicable)] =
      (new py::exception<Error>(m, "InapplicableError", *base))->ptr();
  error_types[static_cast<int>(ErrorKind::Inconsistent)] =
      (new py::exception<Error>(m, "InconsistentError", *base))->ptr();
  error_types[static_cast<int>(ErrorKind::InsufficientData)] =
      (new py::exception<Error>(m, "InsufficientDataError", *base))->ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_types[static_cast<int>(e.kind())], e.what());
    }
  });

  py::class_<GeneratorSpec>(m, "Generator")
      .def_static("load", &load_generator_config, py::arg("path"))
      .def_static("parse", [](const std::string& text) { return parse_generator_config(text); }, py::arg("text"))
      .def_property_readonly("kind", [](const GeneratorSpec& s) { return std::string(kind_name(s.kind)); })
      .def_property_readonly("periods", &GeneratorSpec::periods)
      .def_property_readonly("lengths", &GeneratorSpec::lengths)
      .def_property_readonly("has_states", &GeneratorSpec::has_states)
      .def("with_states",
           [](const GeneratorSpec& s, const std::vector<std::string>& states) {
             std::vector<Bits> bits;
             for (const std::string& t : states) bits.push_back(parse_bits(t));
             return s.with_states(bits);
           })
      .def("keystream", [](const GeneratorSpec& s, size_t count) { return format_bits(keystream(s, count)); },
           py::arg("count"))
      .def("spectrum", [](const GeneratorSpec& s) { return spectrum_dict(combiner_spectrum(s)); })
      .def("predicted_support", &predicted_combiner_support)
      .def("to_config", [](const GeneratorSpec& s) { return format_generator_config(s); });

  m.def("dft", [](const std::string& bits) { return spectrum_dict(dft(PeriodicSeq(parse_bits(bits)))); },
        py::arg("bits"), "Spectrum of one period of a binary sequence.");
  m.def(
      "berlekamp_massey",
      [](const std::string& bits) {
        const BmResult r = berlekamp_massey(parse_bits(bits));
        return py::make_tuple(r.L, r.poly.str());
      },
      py::arg("bits"), "Linear complexity and minimal polynomial.");
  m.def(
      "factor",
      [](const std::string& poly) {
        std::vector<std::pair<std::string, int>> out;
        for (const Factor& f : factorize(BitPoly::parse(poly))) out.emplace_back(f.poly.str(), f.multiplicity);
        return out;
      },
      py::arg("poly"));
  m.def("is_primitive", [](const std::string& poly) { return is_primitive(BitPoly::parse(poly)); });
  m.def(
      "crt_solve",
      [](const std::vector<std::pair<int64_t, uint64_t>>& pairs) {
        std::vector<Congruence> cs;
        for (const auto& [r, n] : pairs) cs.push_back({r, n});
        const CrtSolution s = crt_solve(cs);
        return py::make_tuple(s.value, s.modulus);
      },
      py::arg("congruences"), "Solve x = r_i mod n_i for (r_i, n_i) pairs.");
  m.def("crt_split", [](int64_t tau, const std::vector<uint64_t>& moduli) { return crt_split(tau, moduli); });
  m.def(
      "boolean_metrics",
      [](const std::string& anf) {
        const BooleanFunc f = BooleanFunc::parse_anf(anf);
        py::dict d;
        d["arity"] = f.arity();
        d["truth_table"] = f.truth_table_str();
        d["degree"] = algebraic_degree(f);
        d["balanced"] = is_balanced(f);
        d["nonlinearity"] = nonlinearity(f);
        d["correlation_immunity"] = correlation_immunity(f);
        d["algebraic_immunity"] = algebraic_immunity(f);
        return d;
      },
      py::arg("anf"));
  m.def(
      "a51_keystream",
      [](const std::vector<uint8_t>& key, uint32_t frame) {
        if (key.size() != 8) invalid("A5/1 key must be 8 bytes");
        std::array<uint8_t, 8> k{};
        std::copy(key.begin(), key.end(), k.begin());
        return pack_hex(a51_run(k, frame));
      },
      py::arg("key"), py::arg("frame"));
  m.def(
      "attack",
      [](const GeneratorSpec& spec, const std::string& keystream, std::optional<uint64_t> k) {
        const AttackContext ctx = precompute(spec, k);
        const AttackResult r = run_attack(ctx, parse_bits(keystream));
        py::dict d;
        d["g"] = ctx.g.str();
        d["L"] = ctx.L;
        d["k"] = ctx.k;
        d["g_k"] = ctx.g_k.str();
        d["q"] = ctx.q.str();
        d["tau"] = r.tau;
        d["tau_i"] = r.tau_i;
        d["states"] = format_states(r.states);
        d["bits_used"] = r.bits_used;
        return d;
      },
      py::arg("generator"), py::arg("keystream"), py::arg("k") = py::none(),
      "Recover the initial states of a combiner generator from keystream bits.");
  m.def(
      "exhaustive_search",
      [](const GeneratorSpec& spec, const std::string& keystream) {
        std::vector<std::vector<std::string>> out;
        for (const auto& states : exhaustive_oracle(spec, parse_bits(keystream))) out.push_back(format_states(states));
        return out;
      },
      py::arg("generator"), py::arg("keystream"));
  m.def(
      "complexity",
      [](const GeneratorSpec& spec) {
        const ComplexityReport c = complexity_report(spec);
        py::dict d;
        d["exhaustive"] = c.exhaustive;
        d["correlation"] = c.correlation;
        d["preprocessing"] = c.preprocessing;
        d["attack"] = c.attack;
        d["L"] = c.L;
        d["deg_g_k"] = c.deg_g_k;
        return d;
      },
      py::arg("generator"));
}
