#include "seqdft/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "seqdft/error.hpp"

namespace seqdft {

uint64_t gcd_u64(uint64_t a, uint64_t b) { return std::gcd(a, b); }

uint64_t lcm_u64(uint64_t a, uint64_t b) { return std::lcm(a, b); }

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t n) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

uint64_t powmod_u64(uint64_t base, uint64_t e, uint64_t n) {
  if (n == 1) return 0;
  uint64_t r = 1;
  base %= n;
  while (e) {
    if (e & 1) r = mulmod_u64(r, base, n);
    base = mulmod_u64(base, base, n);
    e >>= 1;
  }
  return r;
}

uint64_t invmod_u64(uint64_t a, uint64_t n) {
  if (n == 1) return 0;
  __int128 t = 0, new_t = 1;
  __int128 r = n, new_r = a % n;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) invalid("value is not invertible modulo " + std::to_string(n));
  if (t < 0) t += n;
  return static_cast<uint64_t>(t);
}

uint64_t reduce_mod(int64_t a, uint64_t n) {
  __int128 r = static_cast<__int128>(a) % static_cast<__int128>(n);
  if (r < 0) r += n;
  return static_cast<uint64_t>(r);
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all 64-bit n.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

uint64_t pollard_rho(uint64_t n) {
  if (n % 2 == 0) return 2;
  for (uint64_t c = 1;; ++c) {
    uint64_t x = 2, y = 2, d = 1;
    auto f = [&](uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(uint64_t n, std::vector<uint64_t>& out) {
  if (n == 1) return;
  for (uint64_t p = 2; p < 1000; ++p) {
    if (p * p > n) break;
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<uint64_t, unsigned>> factor_u64(uint64_t n) {
  if (n == 0) invalid("cannot factor zero");
  std::vector<uint64_t> primes;
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<uint64_t, unsigned>> out;
  for (uint64_t p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

std::vector<uint64_t> divisors_u64(uint64_t n) {
  std::vector<uint64_t> divs{1};
  for (auto [p, e] : factor_u64(n)) {
    size_t count = divs.size();
    uint64_t pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

unsigned order_of_two(uint64_t n) {
  if (n == 0 || n % 2 == 0) invalid("order of 2 needs an odd modulus");
  if (n == 1) return 1;
  unsigned k = 1;
  uint64_t x = 2 % n;
  while (x != 1) {
    x = mulmod_u64(x, 2, n);
    ++k;
  }
  return k;
}

}  // namespace seqdft
