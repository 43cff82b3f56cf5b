#pragma once

#include "defining.hpp"
#include "sequences.hpp"

namespace eulerseq {

struct BerlekampMasseyResult {
  u64 length = 0;
  std::vector<u64> connection;  // packed connection polynomial, c_0 at bit 0
  std::vector<u64> profile;     // L after each processed bit
};

// Bit-packed Berlekamp-Massey over GF(2). The discrepancy is the parity of a
// masked popcount against a reversed sliding window of the input.
inline BerlekampMasseyResult berlekamp_massey(const std::vector<std::uint8_t>& bits) {
  if (bits.empty()) throw std::invalid_argument("berlekamp_massey: empty input");
  const u64 n = bits.size();
  const u64 nwords = n / 64 + 1;
  std::vector<u64> c(nwords, 0), b(nwords, 0), window(nwords, 0);
  c[0] = 1;
  b[0] = 1;
  u64 len = 0;
  u64 gap = 1;  // bits since the last length change
  BerlekampMasseyResult res;
  res.profile.reserve(n);
  auto xor_b_shifted = [&](u64 shift) {
    const u64 wo = shift / 64, s = shift % 64;
    for (u64 k = 0; k + wo < nwords; ++k) {
      u64 v = b[k] << s;
      if (s != 0 && k > 0) v |= b[k - 1] >> (64 - s);
      c[k + wo] ^= v;
    }
  };
  for (u64 i = 0; i < n; ++i) {
    u64 carry = bits[i] & 1u;
    for (u64 w = 0; w < nwords; ++w) {
      const u64 next = window[w] >> 63;
      window[w] = (window[w] << 1) | carry;
      carry = next;
    }
    u64 acc = 0;
    for (u64 w = 0; w < nwords; ++w) acc ^= c[w] & window[w];
    const bool discrepancy = (std::popcount(acc) & 1) != 0;
    if (discrepancy) {
      if (2 * len <= i) {
        const std::vector<u64> old_c = c;
        xor_b_shifted(gap);
        len = i + 1 - len;
        b = old_c;
        gap = 1;
      } else {
        xor_b_shifted(gap);
        ++gap;
      }
    } else {
      ++gap;
    }
    res.profile.push_back(len);
  }
  res.length = len;
  res.connection.assign(c.begin(), c.begin() + static_cast<long>(len / 64 + 1));
  return res;
}

// epsilon(m): the parity deciding whether the unit-exponent block of G
// survives mod 2.
inline int epsilon(u64 m) { return static_cast<int>(m % 2); }

// Closed form L = p^(r_frak+1) - p + (p-1) epsilon((p^r_frak - 1)/2); stated
// only away from Wieferich primes.
inline u64 closed_form_lc(const Params& params) {
  if (is_wieferich(params.p)) {
    const auto prof = two_order_profile(params.p, 1);
    throw WieferichError(prof.lambda, prof.t0);
  }
  const u64 pr_frak = params.period / params.p;
  return params.period - params.p +
         (params.p - 1) * static_cast<u64>(epsilon((pr_frak - 1) / 2));
}

// Hamming weight of G without densifying: (p-1) monomials per nonzero eta
// entry plus the unit block. Validity needs the exponent groups to have
// distinct p-adic valuations, i.e. every class member coprime to p.
inline u64 weight_of_G(const DefiningData& dd) {
  const u64 p = dd.params.p;
  u64 w = (p - 1) * static_cast<u64>(dd.unit_term_parity);
  for (unsigned r = 1; r <= dd.params.r_frak; ++r) {
    const auto& level = dd.levels[r - 1];
    for (u64 l = 0; l < level.class_count(); ++l)
      for (u64 v : level.class_members(l))
        if (v % p == 0)
          throw std::logic_error("weight_of_G: class member divisible by p");
    u64 cnt = 0;
    for (const auto& e : dd.eta[r - 1])
      if (!e.is_zero()) ++cnt;
    w += (p - 1) * cnt;
  }
  return w;
}

// Three independent routes to the linear complexity; they must agree for
// non-Wieferich parameters.
struct LinearComplexityReport {
  u64 bm_value = 0;
  u64 closed_form_value = 0;
  u64 weight_value = 0;
  int epsilon_flag = 0;
  bool agree = false;
  bool r1_from_prior_work = false;  // the r_frak = 1 closed form comes from prior work
};

inline LinearComplexityReport analyze_linear_complexity(const Params& params,
                                                        const DefiningData& dd) {
  LinearComplexityReport rep;
  const BinarySequence seq = generate_threshold(params, 2 * params.period);
  rep.bm_value = berlekamp_massey(seq.bits).length;
  rep.closed_form_value = closed_form_lc(params);
  rep.weight_value = weight_of_G(dd);
  rep.epsilon_flag = epsilon((params.period / params.p - 1) / 2);
  rep.agree = rep.bm_value == rep.closed_form_value && rep.bm_value == rep.weight_value;
  rep.r1_from_prior_work = params.r_frak == 1;
  return rep;
}

}  // namespace eulerseq
