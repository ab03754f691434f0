#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "seqdft/bitpoly.hpp"
#include "seqdft/gf2m.hpp"

namespace seqdft {

struct BmResult {
  // Characteristic polynomial x^L + sum c_k x^k of the shortest LFSR.
  BitPoly poly;
  int L = 0;
};

// Shortest LFSR generating the given prefix. Throws on empty input.
BmResult berlekamp_massey(std::span<const uint8_t> bits);

struct Factor {
  BitPoly poly;
  int multiplicity = 1;
};

// Irreducible factorization over GF(2), ordered by (degree, word).
std::vector<Factor> factorize(const BitPoly& f);

bool is_irreducible(const BitPoly& f);
bool is_primitive(const BitPoly& f);

// Multiplicative order of x modulo an irreducible f with f(0) = 1.
uint64_t poly_root_order(const BitPoly& f);

// Horner evaluation of a GF(2) polynomial at a field point.
Word poly_eval(const FieldCtx& ctx, const BitPoly& f, Word x);

// Minimal polynomial of a nonzero field element.
BitPoly min_poly_of_element(const FieldElement& a);

}  // namespace seqdft
