#include "seqdft/config.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "seqdft/error.hpp"

namespace seqdft {

namespace {

std::string trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] void config_error(size_t line, const std::string& what) {
  fail(ErrorKind::Parse, "config line " + std::to_string(line) + ": " + what);
}

uint64_t parse_uint(const std::string& value, size_t line, const std::string& key) {
  try {
    size_t used = 0;
    const uint64_t v = std::stoull(value, &used, 0);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    config_error(line, "bad integer for '" + key + "': '" + value + "'");
  }
}

std::array<uint8_t, 8> parse_key(const std::string& value, size_t line) {
  std::string hex;
  std::string v = value;
  if (v.rfind("0x", 0) == 0 || v.rfind("0X", 0) == 0) v = v.substr(2);
  for (char c : v) {
    if (std::isxdigit(static_cast<unsigned char>(c))) {
      hex.push_back(c);
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      config_error(line, std::string("bad key character '") + c + "'");
    }
  }
  if (hex.size() != 16) config_error(line, "A5/1 key needs 16 hex digits");
  std::array<uint8_t, 8> key{};
  for (size_t i = 0; i < 8; ++i) key[i] = static_cast<uint8_t>(std::stoul(hex.substr(2 * i, 2), nullptr, 16));
  return key;
}

template <typename F>
void with_line(size_t line, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    config_error(line, e.what());
  }
}

}  // namespace

GeneratorSpec parse_generator_config(std::string_view text) {
  GeneratorSpec spec;
  std::map<unsigned, LfsrSpec> lfsrs;
  std::map<unsigned, size_t> lfsr_lines;
  std::string section;
  unsigned lfsr_index = 0;
  bool kind_seen = false;
  std::string anf_text;
  size_t anf_line = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const size_t hash = raw.find('#');
    const std::string content = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (content.empty()) continue;
    if (content.front() == '[') {
      if (content.back() != ']') config_error(line, "unterminated section header");
      section = trim(content.substr(1, content.size() - 2));
      if (section.rfind("lfsr.", 0) == 0) {
        const std::string idx = section.substr(5);
        const uint64_t v = parse_uint(idx, line, "section");
        if (v == 0 || v > 20) config_error(line, "LFSR index must be in [1, 20]");
        lfsr_index = static_cast<unsigned>(v);
        if (lfsrs.count(lfsr_index)) config_error(line, "duplicate section [" + section + "]");
        lfsrs[lfsr_index] = LfsrSpec{};
        lfsr_lines[lfsr_index] = line;
        section = "lfsr";
      } else if (section != "generator" && section != "function" && section != "attack" && section != "a51") {
        config_error(line, "unknown section [" + section + "]");
      }
      continue;
    }
    const size_t eq = content.find('=');
    if (eq == std::string::npos) config_error(line, "expected key = value");
    const std::string key = trim(content.substr(0, eq));
    const std::string value = trim(content.substr(eq + 1));
    if (section.empty()) config_error(line, "key '" + key + "' outside any section");
    if (section == "generator") {
      if (key == "kind") {
        if (value == "combiner") {
          spec.kind = GeneratorKind::Combiner;
        } else if (value == "filter") {
          spec.kind = GeneratorKind::Filter;
        } else if (value == "a51") {
          spec.kind = GeneratorKind::A51;
        } else {
          config_error(line, "unknown generator kind '" + value + "'");
        }
        kind_seen = true;
      } else if (key == "taps") {
        std::stringstream ts(value);
        std::string item;
        while (std::getline(ts, item, ',')) {
          spec.taps.push_back(static_cast<unsigned>(parse_uint(trim(item), line, "taps")));
        }
      } else {
        config_error(line, "unknown key '" + key + "' in [generator]");
      }
    } else if (section == "lfsr") {
      LfsrSpec& l = lfsrs[lfsr_index];
      if (key == "poly") {
        with_line(line, [&] { l.poly = BitPoly::parse(value); });
      } else if (key == "state") {
        if (value.empty() || value.find_first_of("?xX") != std::string::npos) {
          l.state.reset();
        } else {
          with_line(line, [&] { l.state = parse_bits(value); });
        }
      } else {
        config_error(line, "unknown key '" + key + "' in [lfsr." + std::to_string(lfsr_index) + "]");
      }
    } else if (section == "function") {
      if (key != "anf") config_error(line, "unknown key '" + key + "' in [function]");
      anf_text = value;
      anf_line = line;
    } else if (section == "attack") {
      if (key != "k") config_error(line, "unknown key '" + key + "' in [attack]");
      spec.attack_k = parse_uint(value, line, key);
    } else if (section == "a51") {
      if (key == "key") {
        spec.key = parse_key(value, line);
      } else if (key == "frame") {
        spec.frame = static_cast<uint32_t>(parse_uint(value, line, key));
      } else {
        config_error(line, "unknown key '" + key + "' in [a51]");
      }
    }
  }
  if (!kind_seen) config_error(line, "missing [generator] kind");
  unsigned expect = 1;
  for (auto& [idx, l] : lfsrs) {
    if (idx != expect++) config_error(lfsr_lines[idx], "LFSR sections must be numbered 1, 2, ... without gaps");
    if (l.poly.is_zero()) config_error(lfsr_lines[idx], "[lfsr." + std::to_string(idx) + "] lacks poly");
    spec.lfsrs.push_back(l);
  }
  if (!anf_text.empty()) {
    const unsigned arity = spec.kind == GeneratorKind::Filter ? static_cast<unsigned>(spec.taps.size())
                                                              : static_cast<unsigned>(spec.lfsrs.size());
    with_line(anf_line, [&] { spec.func = BooleanFunc::parse_anf(anf_text, arity); });
  }
  with_line(line, [&] { spec.validate(); });
  return spec;
}

GeneratorSpec load_generator_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_generator_config(buf.str());
}

std::string format_generator_config(const GeneratorSpec& spec) {
  std::ostringstream out;
  out << "[generator]\nkind = " << kind_name(spec.kind) << "\n";
  if (!spec.taps.empty()) {
    out << "taps = ";
    for (size_t i = 0; i < spec.taps.size(); ++i) out << (i ? ", " : "") << spec.taps[i];
    out << "\n";
  }
  for (size_t i = 0; i < spec.lfsrs.size(); ++i) {
    out << "\n[lfsr." << i + 1 << "]\npoly = " << spec.lfsrs[i].poly.str() << "\n";
    out << "state = " << (spec.lfsrs[i].state ? format_bits(*spec.lfsrs[i].state) : "?") << "\n";
  }
  if (spec.func) out << "\n[function]\nanf = " << spec.func->anf_str() << "\n";
  if (spec.attack_k) out << "\n[attack]\nk = " << *spec.attack_k << "\n";
  if (spec.kind == GeneratorKind::A51) {
    static const char kDigits[] = "0123456789ABCDEF";
    out << "\n[a51]\nkey = ";
    for (size_t i = 0; i < 8; ++i) {
      out << (i ? " " : "") << kDigits[spec.key[i] >> 4] << kDigits[spec.key[i] & 15];
    }
    out << "\nframe = " << spec.frame << "\n";
  }
  return out.str();
}

}  // namespace seqdft
