#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace seqdft {

struct Congruence {
  int64_t residue;
  uint64_t modulus;
};

struct CrtSolution {
  uint64_t value;
  uint64_t modulus;
};

// Unique x mod prod(n_i) with x = k_i mod n_i; moduli pairwise coprime.
CrtSolution crt_solve(std::span<const Congruence> congruences);

// tau mod n_i for each modulus.
std::vector<uint64_t> crt_split(int64_t tau, std::span<const uint64_t> moduli);

// Left shift of a product sequence when component i is shifted by k_i.
uint64_t product_shift(std::span<const int64_t> shifts, std::span<const uint64_t> moduli);

// { crt_solve(k_1, ..., k_l) : k_i in support_i }, sorted.
std::vector<uint64_t> product_support(const std::vector<std::vector<uint64_t>>& supports,
                                      std::span<const uint64_t> moduli);

// Indices contained in an odd number of the supports, sorted.
std::vector<uint64_t> xor_support(const std::vector<std::vector<uint64_t>>& supports);

// Moves a support of a period-n component into period big_n (n | big_n):
// index k maps to the x mod big_n with x = k mod n and x = 0 mod big_n / n.
// n and big_n / n must be coprime.
std::vector<uint64_t> lift_support(const std::vector<uint64_t>& support, uint64_t n, uint64_t big_n);

}  // namespace seqdft
