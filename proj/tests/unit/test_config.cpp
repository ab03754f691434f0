#include <gtest/gtest.h>

#include "seqdft/config.hpp"
#include "seqdft/error.hpp"

using namespace seqdft;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_generator_config(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    return e.what();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return {};
}

}  // namespace

TEST(Config, ParsesWorkedGenerator) {
  const GeneratorSpec spec = load_generator_config(std::string(SEQDFT_FIXTURE_DIR) + "/example3.cfg");
  EXPECT_EQ(spec.kind, GeneratorKind::Combiner);
  ASSERT_EQ(spec.lfsrs.size(), 3u);
  EXPECT_EQ(spec.lfsrs[2].poly, BitPoly::parse("x^5+x^2+1"));
  EXPECT_EQ(spec.lfsrs[1].state, parse_bits("101"));
  EXPECT_EQ(spec.func->anf_str(), "a1*a2 + a1*a3 + a2*a3");
  EXPECT_EQ(spec.attack_k, 58u);
  EXPECT_EQ(spec.periods(), (std::vector<uint64_t>{3, 7, 31}));
  EXPECT_EQ(spec.lengths(), (std::vector<unsigned>{2, 3, 5}));
}

TEST(Config, MaskedStatesAndRoundTrip) {
  for (const char* name : {"example1.cfg", "example2.cfg", "example3.cfg", "example3_public.cfg", "filter.cfg", "a51.cfg"}) {
    const GeneratorSpec spec = load_generator_config(std::string(SEQDFT_FIXTURE_DIR) + "/" + name);
    const std::string text = format_generator_config(spec);
    const GeneratorSpec again = parse_generator_config(text);
    EXPECT_EQ(format_generator_config(again), text) << name;
    EXPECT_EQ(again.kind, spec.kind);
    EXPECT_EQ(again.key, spec.key);
    EXPECT_EQ(again.frame, spec.frame);
  }
  const GeneratorSpec masked = load_generator_config(std::string(SEQDFT_FIXTURE_DIR) + "/example3_public.cfg");
  for (const LfsrSpec& l : masked.lfsrs) EXPECT_FALSE(l.state.has_value());
  const GeneratorSpec a51 = load_generator_config(std::string(SEQDFT_FIXTURE_DIR) + "/a51.cfg");
  EXPECT_EQ(a51.key[0], 0x12);
  EXPECT_EQ(a51.key[7], 0xEF);
  EXPECT_EQ(a51.frame, 0x134u);
}

TEST(Config, ErrorsCarryLineNumbers) {
  EXPECT_NE(parse_error("[generator]\nkind = combiner\n[lfsr.1]\npoly = x^2+x+1\ncolour = red\n").find("line 5"),
            std::string::npos);
  EXPECT_NE(parse_error("[generator]\nkind = spiral\n").find("line 2"), std::string::npos);
  EXPECT_NE(parse_error("[nowhere]\n").find("unknown section"), std::string::npos);
  EXPECT_NE(parse_error("kind = combiner\n").find("outside any section"), std::string::npos);
  EXPECT_NE(parse_error("[generator]\nkind = combiner\n[lfsr.2]\npoly = x^2+x+1\n").find("without gaps"),
            std::string::npos);
  const std::string anf = parse_error(
      "[generator]\nkind = combiner\n[lfsr.1]\npoly = x^2+x+1\nstate = 01\n[function]\nanf = a1 * q7\n");
  EXPECT_NE(anf.find("q7"), std::string::npos);
  EXPECT_NE(anf.find("line 7"), std::string::npos);
  EXPECT_NE(parse_error("[generator]\nkind = a51\n[a51]\nkey = 12 34\n").find("16 hex digits"), std::string::npos);
  EXPECT_THROW(load_generator_config("/nonexistent/config.cfg"), Error);
}

TEST(Config, CommentsAndWhitespace) {
  const GeneratorSpec spec = parse_generator_config(
      "# leading comment\n\n[generator]   \n  kind = combiner # trailing\n[lfsr.1]\npoly = 0x7\nstate = 0 1\n"
      "[function]\nanf = a1\n");
  EXPECT_EQ(spec.lfsrs[0].poly, BitPoly::parse("x^2+x+1"));
  EXPECT_EQ(spec.lfsrs[0].state, parse_bits("01"));
}
