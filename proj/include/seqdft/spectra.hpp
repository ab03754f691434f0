#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqdft/bitpoly.hpp"
#include "seqdft/gf2m.hpp"
#include "seqdft/lfsr.hpp"

namespace seqdft {

// Finite-field DFT of a period-n sequence, S_k = sum_t s_t root^(t k),
// with inverse s_t = sum_k S_k root^(-t k). The root has order exactly n.
class Spectrum {
 public:
  Spectrum(FieldPtr ctx, Word root, std::vector<Word> values);

  size_t n() const { return values_.size(); }
  const FieldCtx& ctx() const { return *ctx_; }
  const FieldPtr& ctx_ptr() const { return ctx_; }
  Word root() const { return root_; }
  const std::vector<Word>& values() const { return values_; }
  Word operator[](size_t k) const { return values_[k]; }
  FieldElement at(size_t k) const { return ctx_->element(values_[k]); }

  std::vector<uint64_t> support() const;

  // e with S_k = root^e when S_k lies in the group generated by the root.
  std::optional<uint64_t> exponent(size_t k) const;

  // "0", "1", "a^e" (powers of the root), or a hex word outside that group.
  std::string format_value(size_t k) const;
  // "(3: a^4) (5: a^2) (6: a^1)".
  std::string sparse_str() const;
  // "0,0,0,a^4,0,a^2,a^1".
  std::string dense_str() const;
  // "3:4,5:2,6:1": nonzero indices with root exponents (hex words outside
  // the root's group).
  std::string machine_str() const;

  friend bool operator==(const Spectrum& a, const Spectrum& b);

 private:
  FieldPtr ctx_;
  Word root_;
  std::vector<Word> values_;
};

// Inverse of Spectrum::machine_str.
Spectrum parse_spectrum_machine(std::string_view text, FieldPtr ctx, Word root, size_t n);

// Degree of the smallest field GF(2^m), m >= 2, with an element of order n.
unsigned minimal_field_degree(uint64_t n);

// alpha^((2^m - 1) / n).
Word default_root(const FieldCtx& ctx, uint64_t n);

// Product over the feedback polynomials of one root each, chosen as the
// lowest power alpha^((2^m - 1) j / r) that is a root. Its powers by the
// CRT idempotents recover those component roots, which makes product
// spectra line up with the component spectra.
Word aligned_root(const FieldCtx& ctx, const std::vector<BitPoly>& feedbacks);

// Throws unless root has multiplicative order exactly n.
void check_root_order(const FieldCtx& ctx, Word root, uint64_t n);

Spectrum dft(const PeriodicSeq& s, const FieldPtr& ctx, Word root);
Spectrum dft(const PeriodicSeq& s, const FieldPtr& ctx);
// Transform in the minimal field with the default root.
Spectrum dft(const PeriodicSeq& s);

// Direct O(n^2) evaluation of the defining sum.
Spectrum dft_reference(const PeriodicSeq& s, const FieldPtr& ctx, Word root);

PeriodicSeq idft(const Spectrum& spectrum);

// Per-coset reconstruction s_t = sum over leaders j of
// Tr_{c_j}(S_j root^(-j t)), c_j the coset size.
PeriodicSeq trace_reconstruct(const Spectrum& spectrum);

size_t spectral_weight(const Spectrum& spectrum);

// Spectral weight equals the Berlekamp-Massey linear complexity of two periods.
bool linear_complexity_check(const PeriodicSeq& s);

// Indices k in [0, n) with g(root^k) = 0.
std::vector<uint64_t> zero_indices_from_roots(const BitPoly& g, const FieldCtx& ctx, Word root, uint64_t n);

// Indices k with g(root^-k) = 0: the exact support of a sequence whose
// minimal polynomial is the square-free g.
std::vector<uint64_t> support_from_min_poly(const BitPoly& g, const FieldCtx& ctx, Word root, uint64_t n);

// Spectrum of the left rotation u_t = s_{t + tau}: U_k = root^(-k tau) S_k.
Spectrum shift_spectrum(const Spectrum& spectrum, int64_t tau);

// z_t = sum_i q_i s_{t + i}.
PeriodicSeq lti_filter(const PeriodicSeq& s, const BitPoly& q);

// D[j][k] = root^(j k), so that S = D s.
std::vector<std::vector<Word>> dft_matrix(const FieldCtx& ctx, Word root, uint64_t n);

}  // namespace seqdft
