#pragma once

#include <string>
#include <string_view>

#include "seqdft/generators.hpp"

namespace seqdft {

// Generator description in sectioned key = value text:
//
//   [generator]
//   kind = combiner            # combiner | filter | a51
//   taps = 0, 3, 6             # filter only
//
//   [lfsr.1]
//   poly = x^2+x+1
//   state = 10                 # s_0 first; omit or "?" when unknown
//
//   [function]
//   anf = a1*a2 + a2*a3 + a1*a3
//
//   [attack]
//   k = 58
//
//   [a51]
//   key = 12 23 45 67 89 AB CD EF
//   frame = 0x134
//
// '#' starts a comment. Unknown sections or keys are errors reported with
// their line number.
GeneratorSpec parse_generator_config(std::string_view text);
GeneratorSpec load_generator_config(const std::string& path);

std::string format_generator_config(const GeneratorSpec& spec);

}  // namespace seqdft
