#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace eulerseq {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Big = boost::multiprecision::cpp_int;

// Modular arithmetic on 64-bit operands. Moduli must stay below 2^63 so the
// 128-bit intermediate cannot overflow.
inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a % m) * (b % m) % m);
}

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 0) throw std::invalid_argument("pow_mod: zero modulus");
  u64 acc = 1 % m;
  u64 cur = base % m;
  while (exp > 0) {
    if (exp & 1) acc = mul_mod(acc, cur, m);
    cur = mul_mod(cur, cur, m);
    exp >>= 1;
  }
  return acc;
}

// Deterministic trial division; adequate for desk-scale parameters.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d : {u64{2}, u64{3}, u64{5}}) {
    if (n % d == 0) return n == d;
  }
  for (u64 d = 7; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 4) == 0) return false;
  }
  return true;
}

struct PrimeFactor {
  u64 prime;
  unsigned exponent;
};

inline std::vector<PrimeFactor> factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: zero");
  std::vector<PrimeFactor> out;
  auto strip = [&](u64 p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  strip(2);
  strip(3);
  strip(5);
  for (u64 d = 7; d * d <= n; d += 6) {
    strip(d);
    strip(d + 4);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline u64 euler_phi(u64 n) {
  u64 r = n;
  for (const auto& f : factorize(n)) r = r / f.prime * (f.prime - 1);
  return r;
}

inline u64 checked_pow_u64(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<u64>::max() / base)
      throw std::overflow_error("checked_pow_u64: overflow");
    r *= base;
  }
  return r;
}

inline u64 inverse_mod(u64 a, u64 m) {
  if (m == 0) throw std::invalid_argument("inverse_mod: zero modulus");
  // Extended Euclid on signed 128-bit accumulators.
  __int128 r0 = m, r1 = a % m;
  __int128 s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw std::invalid_argument("inverse_mod: not invertible");
  if (s0 < 0) s0 += m;
  return static_cast<u64>(s0);
}

}  // namespace eulerseq
