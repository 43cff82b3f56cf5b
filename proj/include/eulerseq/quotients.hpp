#pragma once

#include <algorithm>
#include <optional>
#include <utility>

#include "arith.hpp"

namespace eulerseq {

// Parameters of a run: an odd prime p and a fixed exponent r_frak >= 1.
// The sequence period is p^(r_frak+1); quotient levels r = 1..r_frak work
// modulo p^(r+1).
struct Params {
  u64 p = 0;
  unsigned r_frak = 0;
  u64 period = 0;
  std::vector<u64> modulus_levels;  // p^(r+1) for r = 1..r_frak

  Params(u64 p_, unsigned r_frak_) : p(p_), r_frak(r_frak_) {
    if (!is_prime(p) || p < 3) throw std::invalid_argument("p must be an odd prime");
    if (r_frak < 1) throw std::invalid_argument("r must be >= 1");
    period = checked_pow_u64(p, r_frak + 1);
    for (unsigned r = 1; r <= r_frak; ++r)
      modulus_levels.push_back(checked_pow_u64(p, r + 1));
  }

  u64 level_modulus(unsigned r) const {
    if (r < 1 || r > r_frak) throw std::invalid_argument("level out of range");
    return modulus_levels[r - 1];
  }
};

// Euler quotient Q_r(u): the unique value in [0, p^r) with
// Q_r(u) = (u^phi(p^r) - 1) / p^r (mod p^r), and Q_r(u) = 0 when p | u.
// Works modulo p^(2r), which recovers the quotient digit exactly.
inline u64 euler_quotient(u64 u, u64 p, unsigned r) {
  if (!is_prime(p) || p < 3) throw std::invalid_argument("euler_quotient: p must be an odd prime");
  if (r < 1) throw std::invalid_argument("euler_quotient: r must be >= 1");
  if (u % p == 0) return 0;
  const u64 pr = checked_pow_u64(p, r);
  const Big m2 = Big(pr) * pr;
  const Big phi = Big(pr) / p * (p - 1);  // phi(p^r)
  const Big t = boost::multiprecision::powm(Big(u), phi, m2);
  const Big q = (t - 1) / pr;  // exact: t = 1 mod p^r by Euler's theorem
  return static_cast<u64>(q % pr);
}

// Least n >= 1 with a^n = 1 (mod m). Factors phi(m) and descends through its
// prime factors.
inline u64 multiplicative_order(u64 a, u64 m) {
  if (m == 0) throw std::invalid_argument("multiplicative_order: zero modulus");
  if (std::gcd(a % m, m) != 1)
    throw std::invalid_argument("multiplicative_order: gcd(a, m) != 1");
  if (m == 1) return 1;
  u64 n = euler_phi(m);
  for (const auto& f : factorize(n)) {
    while (n % f.prime == 0 && pow_mod(a, n / f.prime, m) == 1) n /= f.prime;
  }
  return n;
}

// A primitive root g modulo p^(r_frak+1), normalized so that Q_r_frak(g) = 1.
struct NormalizedRoot {
  u64 g = 0;
  u64 witness_order = 0;  // phi(p^(r_frak+1))
};

// Finds the smallest primitive root g modulo p^(r_frak+1); if a = Q(g) != 1,
// replaces g by g^(a^-1 + k0*p^r_frak) with the smallest k0 in [0, p-1) that
// keeps the exponent coprime to phi(p^(r_frak+1)).
inline NormalizedRoot find_normalized_root(const Params& params) {
  const u64 m = params.period;
  const u64 phi = euler_phi(m);
  const auto phi_factors = factorize(phi);
  auto primitive = [&](u64 g) {
    if (g % params.p == 0) return false;
    for (const auto& f : phi_factors)
      if (pow_mod(g, phi / f.prime, m) == 1) return false;
    return true;
  };
  u64 g = 2;
  while (!primitive(g)) ++g;

  const u64 a = euler_quotient(g, params.p, params.r_frak);
  if (a != 1) {
    if (a % params.p == 0) throw std::logic_error("find_normalized_root: Q(g) divisible by p");
    const u64 pr = checked_pow_u64(params.p, params.r_frak);
    const u64 a_inv = inverse_mod(a, pr);
    bool fixed = false;
    for (u64 k0 = 0; k0 + 1 < params.p; ++k0) {
      const u64 e = a_inv + k0 * pr;
      if (std::gcd(e, phi) == 1) {
        g = pow_mod(g, e, m);
        fixed = true;
        break;
      }
    }
    if (!fixed) throw std::logic_error("find_normalized_root: no valid k0");
  }
  if (euler_quotient(g, params.p, params.r_frak) != 1)
    throw std::logic_error("find_normalized_root: normalization failed");
  return {g, phi};
}

// Class index of u at level r: Q_r(u), or nullopt when p | u.
inline std::optional<u64> class_index(u64 u, const Params& params, unsigned r) {
  if (r < 1 || r > params.r_frak) throw std::invalid_argument("class_index: level out of range");
  if (u % params.p == 0) return std::nullopt;
  return euler_quotient(u % params.level_modulus(r), params.p, r);
}

// The generalized cyclotomic classes D_l^(r) = { g^(l + k p^r) mod p^(r+1) },
// i.e. the fibers of Q_r over Z*_{p^(r+1)}. Classes are materialized as
// sorted lists when p^(r+1) <= 10^6; membership queries always work through
// euler_quotient.
class CyclotomicPartition {
 public:
  static constexpr u64 kMaterializeBound = 1000000;

  CyclotomicPartition(const Params& params, unsigned level, u64 g)
      : params_(params), level_(level), g_(g) {
    modulus_ = params.level_modulus(level);
    class_count_ = modulus_ / params.p;  // p^r
    if (euler_quotient(g_ % modulus_, params.p, level) != 1)
      throw std::invalid_argument("CyclotomicPartition: Q_r(g) != 1");
    if (modulus_ <= kMaterializeBound) {
      classes_.resize(class_count_);
      const u64 phi = modulus_ - modulus_ / params.p;
      u64 x = 1;
      for (u64 k = 0; k < phi; ++k) {
        classes_[k % class_count_].push_back(x);
        x = mul_mod(x, g_ % modulus_, modulus_);
      }
      for (auto& c : classes_) std::sort(c.begin(), c.end());
    }
  }

  const Params& params() const { return params_; }
  unsigned level() const { return level_; }
  u64 modulus() const { return modulus_; }
  u64 class_count() const { return class_count_; }
  u64 generator() const { return g_; }
  bool materialized() const { return !classes_.empty(); }

  std::optional<u64> class_of(u64 u) const {
    if (u % params_.p == 0) return std::nullopt;
    return euler_quotient(u % modulus_, params_.p, level_);
  }

  const std::vector<std::vector<u64>>& classes() const {
    if (!materialized())
      throw std::length_error("CyclotomicPartition: modulus too large to materialize");
    return classes_;
  }

  const std::vector<u64>& class_members(u64 l) const {
    return classes().at(l % class_count_);
  }

 private:
  Params params_;
  unsigned level_;
  u64 g_;
  u64 modulus_ = 0;
  u64 class_count_ = 0;
  std::vector<std::vector<u64>> classes_;
};

// Order-of-2 tower: lambda = ord_p(2), t0 = largest r with ord_{p^r}(2) equal
// to lambda. For r > t0 the order is lambda * p^(r - t0); non-Wieferich
// primes have t0 = 1.
struct TwoOrderProfile {
  u64 lambda = 0;
  unsigned t0 = 0;
  std::vector<u64> orders;  // ord of 2 mod p^r for r = 1..r_max
};

inline bool is_wieferich(u64 p) {
  if (!is_prime(p) || p < 3) throw std::invalid_argument("is_wieferich: p must be an odd prime");
  const u64 p2 = checked_pow_u64(p, 2);
  return pow_mod(2, p - 1, p2) == 1;
}

inline TwoOrderProfile two_order_profile(u64 p, unsigned r_max) {
  if (!is_prime(p) || p < 3) throw std::invalid_argument("two_order_profile: p must be an odd prime");
  if (r_max < 1) throw std::invalid_argument("two_order_profile: r_max must be >= 1");
  TwoOrderProfile prof;
  prof.lambda = multiplicative_order(2, p);
  prof.t0 = 1;
  for (unsigned r = 2;; ++r) {
    u64 m;
    try {
      m = checked_pow_u64(p, r);
    } catch (const std::overflow_error&) {
      break;  // tower exhausted the 64-bit range; t0 already found for desk scale
    }
    if (pow_mod(2, prof.lambda, m) != 1) break;
    prof.t0 = r;
  }
  for (unsigned r = 1; r <= r_max; ++r)
    prof.orders.push_back(multiplicative_order(2, checked_pow_u64(p, r)));
  for (unsigned r = 1; r <= r_max; ++r) {
    const u64 expected = (r <= prof.t0)
                             ? prof.lambda
                             : prof.lambda * checked_pow_u64(p, r - prof.t0);
    if (prof.orders[r - 1] != expected)
      throw std::logic_error("two_order_profile: tower law violated");
  }
  return prof;
}

}  // namespace eulerseq
