#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace seqdft {

// Integer helpers on 64-bit values. Products go through 128-bit
// intermediates so moduli up to 2^64 - 1 are safe.

uint64_t gcd_u64(uint64_t a, uint64_t b);
uint64_t lcm_u64(uint64_t a, uint64_t b);
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t n);
uint64_t powmod_u64(uint64_t base, uint64_t e, uint64_t n);

// Inverse of a modulo n; throws when gcd(a, n) != 1.
uint64_t invmod_u64(uint64_t a, uint64_t n);

// Reduces a signed value into [0, n).
uint64_t reduce_mod(int64_t a, uint64_t n);

bool is_prime_u64(uint64_t n);

// Prime factorization as (prime, exponent) pairs in ascending order.
std::vector<std::pair<uint64_t, unsigned>> factor_u64(uint64_t n);

std::vector<uint64_t> divisors_u64(uint64_t n);

// Multiplicative order of 2 modulo odd n > 1 (the degree of the smallest
// binary extension field holding an element of order n). ord(1) = 1.
unsigned order_of_two(uint64_t n);

}  // namespace seqdft
