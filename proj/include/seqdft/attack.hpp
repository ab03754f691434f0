#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqdft/bitmatrix.hpp"
#include "seqdft/bitpoly.hpp"
#include "seqdft/generators.hpp"
#include "seqdft/gf2m.hpp"
#include "seqdft/gfpoly.hpp"
#include "seqdft/lfsr.hpp"

namespace seqdft {

// One isolated factor g_j of the keystream minimal polynomial g. The filter
// q = g / g_j keeps only the G(g_j) component of a keystream window; the
// component's phase is read off in GF(2^e), e = deg g_j.
struct AttackStage {
  BitPoly factor;
  unsigned degree = 0;
  // Multiplicative order d of the roots of the factor.
  uint64_t root_order = 0;
  BitPoly q;
  FieldPtr field;
  // Element of order d; for factors whose roots combine whole register
  // periods it is the aligned root of those registers.
  Word rho = 0;
  uint64_t k = 0;
  // rho^(k mod d), a root of the factor.
  Word theta = 0;
  // True when the Hankel matrix comes from the decimated reference.
  bool decimation_path = false;
  // 2e - 1 bits of a G(g_j) sequence and their e x e Hankel matrix.
  Bits matrix_seq;
  BitMatrix m;
  // Component value of the reference keystream.
  Word b_ref = 0;
};

struct AttackContext {
  // Public structure (initial states cleared).
  GeneratorSpec spec;
  std::vector<uint64_t> periods;
  uint64_t n = 0;
  // Reference keystream: every register started from 0...01.
  PeriodicSeq ref_seq;
  BitPoly g;
  int L = 0;
  std::vector<Factor> factors;
  // Chosen exponent and its factor; q = g / g_k.
  uint64_t k = 0;
  BitPoly g_k;
  BitPoly q;
  // First 2 deg(g_k) bits of the k-decimated reference and their
  // Berlekamp-Massey polynomial (equal to g_k by construction).
  Bits decimated_prefix;
  BitPoly g_k_decimation;
  // Stage 0 is the chosen factor; later stages cover the remaining
  // register periods.
  std::vector<AttackStage> stages;
};

struct StageReport {
  BitPoly factor;
  uint64_t root_order = 0;
  uint64_t k = 0;
  uint64_t tau_mod = 0;
};

struct AttackResult {
  uint64_t tau = 0;
  std::vector<uint64_t> tau_i;
  std::vector<Bits> states;
  size_t bits_used = 0;
  std::vector<StageReport> stages;
  double tau_ms = 0;
  double states_ms = 0;
};

// Reference run, minimal polynomial, factor selection and the per-stage
// precomputation. A pinned k (argument, else spec.attack_k) must be
// admissible. Throws Inapplicable when g is irreducible or no k works.
AttackContext precompute(const GeneratorSpec& spec, std::optional<uint64_t> k = std::nullopt);

// k is admissible for factor j when gcd(k, n) = 1, g_j(rho^(k mod d)) = 0
// and Berlekamp-Massey on 2 deg(g_j) bits of the k-decimated reference
// returns g_j.
bool is_admissible(const AttackContext& ctx, size_t factor_index, uint64_t k);
// All admissible k in [1, n) for the chosen factor.
std::vector<uint64_t> admissible_exponents(const AttackContext& ctx);

// Delay tau with z_t = ref_{t - tau}. Needs at least L bits; throws
// InsufficientData below that and Inconsistent when z does not come from
// the generator.
uint64_t recover_tau(const AttackContext& ctx, const Bits& z, std::vector<StageReport>* stages = nullptr);

// Per-register delays tau mod r_i and the initial states they imply.
AttackResult recover_states(const AttackContext& ctx, uint64_t tau);

// recover_tau, recover_states, and re-synthesis against every observed bit.
AttackResult run_attack(const AttackContext& ctx, const Bits& z);

// Every combination of nonzero initial states whose keystream matches z.
// Throws Inconsistent when nothing matches.
std::vector<std::vector<Bits>> exhaustive_oracle(const GeneratorSpec& spec, const Bits& z);

struct ComplexityReport {
  unsigned lfsr_count = 0;
  int L = 0;
  int deg_g_k = 0;
  double exhaustive = 0;
  double correlation = 0;
  double bm = 0;
  double g_k_cost = 0;
  double evaluation = 0;
  double preprocessing = 0;
  double filtering = 0;
  double solve = 0;
  double state_cost = 0;
  double attack = 0;
};

// Operation-count estimates: exhaustive 2^(sum m_i - 1); correlation
// sum 2^(m_i - 1); preprocessing L log2 L + m (log2 m)^2 + N eta(m) +
// m log2 N with eta(m) = m log2 m log2 log2 m, N = deg g, m = deg g_k;
// attack L + d^(log2 7) + l.
ComplexityReport complexity_report(const GeneratorSpec& spec);
ComplexityReport complexity_report(const AttackContext& ctx);

}  // namespace seqdft
