#include "seqdft/crt.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "seqdft/error.hpp"
#include "seqdft/numtheory.hpp"

namespace seqdft {

CrtSolution crt_solve(std::span<const Congruence> congruences) {
  uint64_t x = 0;
  uint64_t n = 1;
  for (const Congruence& c : congruences) {
    if (c.modulus == 0) invalid("CRT modulus must be positive");
    if (gcd_u64(n, c.modulus) != 1) {
      invalid("CRT moduli are not pairwise coprime (modulus " + std::to_string(c.modulus) + ")");
    }
    if (static_cast<unsigned __int128>(n) * c.modulus > ~uint64_t{0}) invalid("CRT modulus product overflows");
    const uint64_t r = reduce_mod(c.residue, c.modulus);
    // x + n t = r (mod c.modulus)  =>  t = (r - x) n^-1.
    const uint64_t diff = reduce_mod(static_cast<int64_t>(r) - static_cast<int64_t>(x % c.modulus), c.modulus);
    const uint64_t t = mulmod_u64(diff, invmod_u64(n % c.modulus, c.modulus), c.modulus);
    x += n * t;
    n *= c.modulus;
  }
  return {x % n, n};
}

std::vector<uint64_t> crt_split(int64_t tau, std::span<const uint64_t> moduli) {
  std::vector<uint64_t> out;
  out.reserve(moduli.size());
  for (uint64_t m : moduli) {
    if (m == 0) invalid("CRT modulus must be positive");
    out.push_back(reduce_mod(tau, m));
  }
  return out;
}

uint64_t product_shift(std::span<const int64_t> shifts, std::span<const uint64_t> moduli) {
  if (shifts.size() != moduli.size()) invalid("one shift per component is required");
  std::vector<Congruence> c;
  for (size_t i = 0; i < shifts.size(); ++i) c.push_back({shifts[i], moduli[i]});
  return crt_solve(c).value;
}

std::vector<uint64_t> product_support(const std::vector<std::vector<uint64_t>>& supports,
                                      std::span<const uint64_t> moduli) {
  if (supports.size() != moduli.size()) invalid("one support per component is required");
  std::vector<Congruence> probe;
  for (uint64_t m : moduli) probe.push_back({0, m});
  crt_solve(probe);
  std::vector<uint64_t> out;
  for (const auto& s : supports) {
    if (s.empty()) return out;
  }
  std::vector<size_t> idx(supports.size(), 0);
  while (true) {
    std::vector<Congruence> c;
    for (size_t i = 0; i < supports.size(); ++i) c.push_back({static_cast<int64_t>(supports[i][idx[i]]), moduli[i]});
    out.push_back(crt_solve(c).value);
    size_t i = 0;
    while (i < idx.size() && ++idx[i] == supports[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<uint64_t> xor_support(const std::vector<std::vector<uint64_t>>& supports) {
  std::map<uint64_t, unsigned> count;
  for (const auto& s : supports) {
    for (uint64_t k : s) ++count[k];
  }
  std::vector<uint64_t> out;
  for (auto [k, c] : count) {
    if (c % 2 == 1) out.push_back(k);
  }
  return out;
}

std::vector<uint64_t> lift_support(const std::vector<uint64_t>& support, uint64_t n, uint64_t big_n) {
  if (n == 0 || big_n % n != 0) invalid("lift target period must be a multiple of the source period");
  const uint64_t cofactor = big_n / n;
  std::vector<uint64_t> out;
  for (uint64_t k : support) {
    const Congruence c[] = {{static_cast<int64_t>(k % n), n}, {0, cofactor}};
    out.push_back(crt_solve(c).value);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace seqdft
