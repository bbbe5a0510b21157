#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace deltacodes::nt {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 b, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// b^e, throwing if the result exceeds 2^62.
inline u64 ipow(u64 b, unsigned e) {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (b != 0 && r > (u64{1} << 62) / b) raise(errc::too_large, "integer power overflow");
    r *= b;
  }
  return r;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Prime factorization by trial division, as (prime, exponent) pairs in increasing order.
inline std::vector<std::pair<u64, unsigned>> factor(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    unsigned e = 0;
    while (n % d == 0) n /= d, ++e;
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (auto& [p, e] : factor(n)) out.push_back(p);
  return out;
}

// Writes q = p^e; nullopt when q is not a prime power.
inline std::optional<std::pair<u64, unsigned>> prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  auto f = factor(q);
  if (f.size() != 1) return std::nullopt;
  return std::make_pair(f[0].first, f[0].second);
}

// Least e > 0 with a^e = 1 mod n; requires gcd(a, n) = 1.
inline u64 mult_order(u64 a, u64 n) {
  if (n == 1) return 1;
  u64 e = 1, x = a % n;
  while (x != 1) {
    x = mulmod(x, a, n);
    ++e;
  }
  return e;
}

inline long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

inline long inverse_mod(long a, long n) {
  long t = 0, nt = 1, r = n, nr = mod(a, n);
  while (nr) {
    long qq = r / nr;
    t -= qq * nt, std::swap(t, nt);
    r -= qq * nr, std::swap(r, nr);
  }
  if (r != 1) raise(errc::u_not_coprime, "element not invertible modulo n");
  return mod(t, n);
}

// Number of trailing zero digits of i written in base p.
inline unsigned valuation(u64 i, u64 p) {
  unsigned v = 0;
  while (i % p == 0) i /= p, ++v;
  return v;
}

}  // namespace deltacodes::nt
