#pragma once

#include <array>
#include <bit>
#include <cstdio>
#include <string>

#include "arith.hpp"

namespace eulerseq {

// Binary extension fields GF(2^N) for 1 <= N <= 512. Elements are bit
// polynomials of degree < N packed into 64-bit words; reduction is the
// generic sparse-aware routine against a deterministically chosen modulus.
inline constexpr unsigned kMaxFieldDegree = 512;

namespace gf2detail {

inline constexpr unsigned kWords = kMaxFieldDegree / 64;  // element words
inline constexpr unsigned kModWords = kWords + 1;         // modulus words (bit N set)

using EWords = std::array<u64, kWords>;
using MWords = std::array<u64, kModWords>;
using PWords = std::array<u64, 2 * kWords>;

// Carry-less 64x64 -> 128 bit multiply: shift-xor schoolbook with a 4-bit
// window. Both the low and the overflow parts of x*v are tabulated, so no
// correction pass is needed.
inline void clmul64(u64 x, u64 y, u64& hi, u64& lo) {
  u64 lo_tab[16], hi_tab[16];
  lo_tab[0] = 0;
  hi_tab[0] = 0;
  lo_tab[1] = x;
  hi_tab[1] = 0;
  for (unsigned v = 2; v < 16; v <<= 1) {
    lo_tab[v] = lo_tab[v >> 1] << 1;
    hi_tab[v] = (hi_tab[v >> 1] << 1) | (lo_tab[v >> 1] >> 63);
    for (unsigned w = 1; w < v; ++w) {
      lo_tab[v + w] = lo_tab[v] ^ lo_tab[w];
      hi_tab[v + w] = hi_tab[v] ^ hi_tab[w];
    }
  }
  u64 l = 0, h = 0;
  for (int i = 60; i >= 0; i -= 4) {
    h = (h << 4) | (l >> 60);
    l <<= 4;
    const unsigned v = (y >> i) & 0xF;
    l ^= lo_tab[v];
    h ^= hi_tab[v];
  }
  hi = h;
  lo = l;
}

// Squaring spreads each bit to an even position: byte -> 16-bit interleave.
inline constexpr std::array<std::uint16_t, 256> kSpread = [] {
  std::array<std::uint16_t, 256> t{};
  for (unsigned b = 0; b < 256; ++b) {
    std::uint16_t v = 0;
    for (unsigned i = 0; i < 8; ++i)
      if (b & (1u << i)) v = static_cast<std::uint16_t>(v | (1u << (2 * i)));
    t[b] = v;
  }
  return t;
}();

inline u64 spread32(u64 half) {
  return static_cast<u64>(kSpread[half & 0xFF]) |
         (static_cast<u64>(kSpread[(half >> 8) & 0xFF]) << 16) |
         (static_cast<u64>(kSpread[(half >> 16) & 0xFF]) << 32) |
         (static_cast<u64>(kSpread[(half >> 24) & 0xFF]) << 48);
}

template <std::size_t W>
inline int top_bit(const std::array<u64, W>& a) {
  for (int w = static_cast<int>(W) - 1; w >= 0; --w)
    if (a[w] != 0) return w * 64 + 63 - std::countl_zero(a[w]);
  return -1;
}

// a ^= b << shift
template <std::size_t W>
inline void xor_shifted(std::array<u64, W>& a, const std::array<u64, W>& b, unsigned shift) {
  const unsigned wo = shift / 64, s = shift % 64;
  for (unsigned k = 0; k + wo < W; ++k) {
    u64 v = b[k] << s;
    if (s != 0 && k > 0) v |= b[k - 1] >> (64 - s);
    a[k + wo] ^= v;
  }
}

inline MWords poly_gcd(MWords a, MWords b) {
  int da = top_bit(a), db = top_bit(b);
  while (db >= 0) {
    if (da < db) {
      std::swap(a, b);
      std::swap(da, db);
      continue;
    }
    xor_shifted(a, b, static_cast<unsigned>(da - db));
    da = top_bit(a);
  }
  return a;
}

// Modular reduction data: the modulus and its 64 one-word shifts.
struct Reducer {
  unsigned n = 0;
  unsigned nwords = 0;
  u64 top_mask = 0;
  MWords modulus{};
  std::array<MWords, 64> shifted{};

  void init(unsigned n_, const MWords& m) {
    n = n_;
    nwords = (n + 63) / 64;
    top_mask = (n % 64) ? ((u64{1} << (n % 64)) - 1) : ~u64{0};
    modulus = m;
    for (unsigned s = 0; s < 64; ++s) {
      shifted[s] = MWords{};
      xor_shifted(shifted[s], m, s);
    }
  }

  EWords reduce(PWords prod) const {
    for (int w = 2 * static_cast<int>(kWords) - 1; w >= 0; --w) {
      while (prod[w] != 0) {
        const int bit = w * 64 + 63 - std::countl_zero(prod[w]);
        if (bit < static_cast<int>(n)) goto done;
        const unsigned off = static_cast<unsigned>(bit) - n;
        const unsigned wo = off / 64;
        const MWords& row = shifted[off % 64];
        for (unsigned k = 0; k < kModWords; ++k) prod[wo + k] ^= row[k];
      }
    }
  done:
    EWords out{};
    for (unsigned k = 0; k < nwords; ++k) out[k] = prod[k];
    return out;
  }

  EWords mul(const EWords& a, const EWords& b) const {
    PWords prod{};
    for (unsigned i = 0; i < nwords; ++i) {
      if (a[i] == 0) continue;
      for (unsigned j = 0; j < nwords; ++j) {
        if (b[j] == 0) continue;
        u64 hi, lo;
        clmul64(a[i], b[j], hi, lo);
        prod[i + j] ^= lo;
        prod[i + j + 1] ^= hi;
      }
    }
    return reduce(prod);
  }

  EWords sqr(const EWords& a) const {
    PWords prod{};
    for (unsigned i = 0; i < nwords; ++i) {
      prod[2 * i] = spread32(a[i] & 0xFFFFFFFFu);
      prod[2 * i + 1] = spread32(a[i] >> 32);
    }
    return reduce(prod);
  }
};

// Rabin irreducibility: x^(2^n) = x mod f and gcd(x^(2^(n/q)) - x, f) = 1 for
// every prime q | n. Small-degree factors are rejected early through the
// first few distinct-degree gcds.
inline bool is_irreducible(unsigned n, const MWords& m) {
  if (n == 1) return true;
  Reducer red;
  red.init(n, m);
  EWords x{};
  x[0] = 2;  // the polynomial x
  std::vector<unsigned> checkpoints;
  for (const auto& f : factorize(n)) checkpoints.push_back(n / static_cast<unsigned>(f.prime));
  EWords t = x;
  for (unsigned k = 1; k <= n; ++k) {
    t = red.sqr(t);
    if (k == n) break;
    bool need_gcd = (k <= 8);
    for (unsigned c : checkpoints) need_gcd = need_gcd || (k == c);
    if (!need_gcd) continue;
    MWords diff{};
    for (unsigned w = 0; w < kWords; ++w) diff[w] = t[w];
    diff[0] ^= 2;
    const MWords g = poly_gcd(red.modulus, diff);
    if (top_bit(g) != 0) return false;
  }
  return t == x;
}

// Lexicographically smallest irreducible of degree n: scan x^n plus an
// ascending low part; even constant terms and even-weight candidates are
// divisible by x or x+1 and skipped outright.
inline MWords find_modulus(unsigned n) {
  MWords m{};
  if (n == 1) {
    m[0] = 2;  // x
    return m;
  }
  const u64 low_limit = (n < 24) ? (u64{1} << n) : (u64{1} << 24);
  for (u64 low = 1; low < low_limit; low += 2) {
    if (std::popcount(low) % 2 != 0) continue;
    m = MWords{};
    m[0] = low;
    m[n / 64] |= u64{1} << (n % 64);
    if (is_irreducible(n, m)) return m;
  }
  throw std::logic_error("find_modulus: scan bound exhausted");
}

}  // namespace gf2detail

class FieldElement;

class FieldContext {
 public:
  // Deterministic construction: the lexicographically smallest irreducible
  // modulus of the given degree.
  explicit FieldContext(unsigned degree) {
    check_degree(degree);
    reducer_.init(degree, gf2detail::find_modulus(degree));
    group_order_ = (Big(1) << degree) - 1;
  }

  // Construction from a stored modulus (deserialization); re-certifies
  // irreducibility.
  FieldContext(unsigned degree, const gf2detail::MWords& modulus) {
    check_degree(degree);
    if (gf2detail::top_bit(modulus) != static_cast<int>(degree))
      throw std::invalid_argument("FieldContext: modulus degree mismatch");
    if (!gf2detail::is_irreducible(degree, modulus))
      throw std::invalid_argument("FieldContext: modulus is not irreducible");
    reducer_.init(degree, modulus);
    group_order_ = (Big(1) << degree) - 1;
  }

  unsigned degree() const { return reducer_.n; }
  unsigned words() const { return reducer_.nwords; }
  const Big& group_order() const { return group_order_; }
  const gf2detail::MWords& modulus_words() const { return reducer_.modulus; }

  std::string modulus_hex() const {
    const unsigned mw = reducer_.n / 64 + 1;
    return words_to_hex(reducer_.modulus.data(), mw);
  }

  FieldElement zero() const;
  FieldElement one() const;
  // Element whose coefficient bitstring is t; this is also the fixed
  // candidate enumeration order 1, x, x+1, x^2, ...
  FieldElement element_from_bits(u64 t) const;
  FieldElement element_from_words(const gf2detail::EWords& w) const;
  FieldElement element_from_string(const std::string& s) const;

  static std::string words_to_hex(const u64* w, unsigned count) {
    std::string out;
    char buf[17];
    for (unsigned i = count; i-- > 0;) {
      std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(w[i]));
      out += buf;
    }
    return out;
  }

 private:
  friend class FieldElement;

  static void check_degree(unsigned degree) {
    if (degree < 1 || degree > kMaxFieldDegree)
      throw std::invalid_argument("FieldContext: degree out of [1, 512]");
  }

  gf2detail::Reducer reducer_;
  Big group_order_;
};

class FieldElement {
 public:
  FieldElement(const FieldContext* ctx, const gf2detail::EWords& w) : ctx_(ctx), w_(w) {}

  const FieldContext& context() const { return *ctx_; }

  bool is_zero() const {
    for (u64 w : w_)
      if (w != 0) return false;
    return true;
  }

  bool is_one() const {
    if (w_[0] != 1) return false;
    for (unsigned i = 1; i < gf2detail::kWords; ++i)
      if (w_[i] != 0) return false;
    return true;
  }

  // 0 or 1 for the corresponding field constants; anything else is a
  // non-bit value and raises.
  int as_bit() const {
    if (is_zero()) return 0;
    if (is_one()) return 1;
    throw std::domain_error("FieldElement: value is not a bit");
  }

  bool operator==(const FieldElement& rhs) const {
    require_same_context(rhs);
    return w_ == rhs.w_;
  }
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

  FieldElement operator+(const FieldElement& rhs) const {
    require_same_context(rhs);
    gf2detail::EWords out = w_;
    for (unsigned i = 0; i < gf2detail::kWords; ++i) out[i] ^= rhs.w_[i];
    return {ctx_, out};
  }
  FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }

  FieldElement operator*(const FieldElement& rhs) const {
    require_same_context(rhs);
    return {ctx_, ctx_->reducer_.mul(w_, rhs.w_)};
  }
  FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

  FieldElement squared() const { return {ctx_, ctx_->reducer_.sqr(w_)}; }

  FieldElement pow(u64 e) const {
    if (e == 0) return ctx_->one();
    FieldElement r = *this;
    const int top = 63 - std::countl_zero(e);
    for (int i = top - 1; i >= 0; --i) {
      r = r.squared();
      if ((e >> i) & 1) r = r * (*this);
    }
    return r;
  }

  FieldElement pow(const Big& e) const {
    if (e < 0) throw std::invalid_argument("FieldElement::pow: negative exponent");
    if (e == 0) return ctx_->one();
    FieldElement r = *this;
    const int top = static_cast<int>(boost::multiprecision::msb(e));
    for (int i = top - 1; i >= 0; --i) {
      r = r.squared();
      if (boost::multiprecision::bit_test(e, i)) r = r * (*this);
    }
    return r;
  }

  // Extended Euclid over GF(2)[x]; the modulus is irreducible, so every
  // nonzero element is invertible.
  FieldElement inverse() const {
    if (is_zero()) throw std::domain_error("FieldElement: inverse of zero");
    using gf2detail::MWords;
    MWords r0 = ctx_->reducer_.modulus;
    MWords r1{}, s0{}, s1{};
    for (unsigned i = 0; i < gf2detail::kWords; ++i) r1[i] = w_[i];
    s1[0] = 1;
    int d0 = gf2detail::top_bit(r0), d1 = gf2detail::top_bit(r1);
    while (d1 >= 0) {
      if (d0 < d1) {
        std::swap(r0, r1);
        std::swap(s0, s1);
        std::swap(d0, d1);
        continue;
      }
      const unsigned shift = static_cast<unsigned>(d0 - d1);
      gf2detail::xor_shifted(r0, r1, shift);
      gf2detail::xor_shifted(s0, s1, shift);
      d0 = gf2detail::top_bit(r0);
    }
    if (gf2detail::top_bit(r0) != 0)
      throw std::logic_error("FieldElement::inverse: gcd with modulus is not 1");
    gf2detail::EWords out{};
    for (unsigned i = 0; i < gf2detail::kWords; ++i) out[i] = s0[i];
    return {ctx_, out};
  }

  const gf2detail::EWords& words() const { return w_; }

  // Serialization: gf2:<N>:<hex>, lowercase hex of the coefficient
  // bitstring, most significant word first.
  std::string to_string() const {
    return "gf2:" + std::to_string(ctx_->degree()) + ":" +
           FieldContext::words_to_hex(w_.data(), ctx_->words());
  }

 private:
  void require_same_context(const FieldElement& rhs) const {
    if (ctx_ != rhs.ctx_)
      throw std::invalid_argument("FieldElement: context mismatch");
  }

  const FieldContext* ctx_;
  gf2detail::EWords w_;
};

inline FieldElement FieldContext::zero() const { return {this, gf2detail::EWords{}}; }

inline FieldElement FieldContext::one() const {
  gf2detail::EWords w{};
  w[0] = 1;
  return {this, w};
}

inline FieldElement FieldContext::element_from_bits(u64 t) const {
  if (degree() < 64 && t >= (u64{1} << degree()))
    throw std::invalid_argument("element_from_bits: value exceeds field degree");
  gf2detail::EWords w{};
  w[0] = t;
  return {this, w};
}

inline FieldElement FieldContext::element_from_words(const gf2detail::EWords& w) const {
  for (unsigned i = words(); i < gf2detail::kWords; ++i)
    if (w[i] != 0) throw std::invalid_argument("element_from_words: stray high bits");
  if (words() > 0 && (w[words() - 1] & ~reducer_.top_mask) != 0)
    throw std::invalid_argument("element_from_words: stray high bits");
  return {this, w};
}

inline FieldElement FieldContext::element_from_string(const std::string& s) const {
  const std::string prefix = "gf2:" + std::to_string(degree()) + ":";
  if (s.rfind(prefix, 0) != 0)
    throw std::invalid_argument("element_from_string: bad prefix for this context");
  const std::string hex = s.substr(prefix.size());
  if (hex.size() != 16 * words())
    throw std::invalid_argument("element_from_string: bad payload length");
  gf2detail::EWords w{};
  for (unsigned i = 0; i < words(); ++i) {
    const std::string group = hex.substr(16 * (words() - 1 - i), 16);
    w[i] = std::stoull(group, nullptr, 16);
  }
  return element_from_words(w);
}

// a^(2^k): k successive Frobenius applications.
inline FieldElement frobenius_power(FieldElement a, unsigned k) {
  for (unsigned i = 0; i < k; ++i) a = a.squared();
  return a;
}

// Exact multiplicative order, given a bound the order must divide (here
// always a power of p, so the bound factors instantly).
inline u64 element_order(const FieldElement& a, u64 order_bound) {
  if (a.is_zero()) throw std::invalid_argument("element_order: zero element");
  if (order_bound == 0) throw std::invalid_argument("element_order: zero bound");
  if (!a.pow(order_bound).is_one())
    throw std::domain_error("element_order: order does not divide the supplied bound");
  u64 n = order_bound;
  for (const auto& f : factorize(order_bound)) {
    while (n % f.prime == 0 && a.pow(n / f.prime).is_one()) n /= f.prime;
  }
  return n;
}

// Deterministic primitive m-th root of unity: the first candidate c in the
// counting order 1, x, x+1, x^2, ... whose power c^((2^N-1)/m) has order
// exactly m.
inline FieldElement primitive_root_of_unity(const FieldContext& ctx, u64 m) {
  if (m == 0) throw std::invalid_argument("primitive_root_of_unity: m must be positive");
  if (ctx.group_order() % m != 0)
    throw std::domain_error("primitive_root_of_unity: m does not divide 2^N - 1");
  const Big cofactor = ctx.group_order() / m;
  const auto m_factors = factorize(m);
  const u64 t_limit =
      (ctx.degree() < 20) ? (u64{1} << ctx.degree()) : (u64{1} << 20);
  for (u64 t = 1; t < t_limit; ++t) {
    const FieldElement y = ctx.element_from_bits(t).pow(cofactor);
    bool exact = true;
    for (const auto& f : m_factors) {
      if (y.pow(m / f.prime).is_one()) {
        exact = false;
        break;
      }
    }
    if (exact) return y;
  }
  throw std::logic_error("primitive_root_of_unity: candidate scan exhausted");
}

// Tr^n_k(a) = a + a^(2^k) + ... + a^(2^((n/k-1)k)), the trace from the
// degree-n subfield onto the degree-k subfield. With certify set, both the
// argument and the result are checked to lie in their stated subfields.
inline FieldElement trace_to_subfield(const FieldElement& a, unsigned n, unsigned k,
                                      bool certify = false) {
  if (k < 1 || n < 1 || n % k != 0)
    throw std::invalid_argument("trace_to_subfield: k must divide n");
  if (a.context().degree() % n != 0)
    throw std::invalid_argument("trace_to_subfield: n must divide the ambient degree");
  if (certify && frobenius_power(a, n) != a)
    throw std::domain_error("trace_to_subfield: element not in the stated subfield");
  FieldElement acc = a;
  FieldElement cur = a;
  for (unsigned i = 1; i < n / k; ++i) {
    cur = frobenius_power(cur, k);
    acc += cur;
  }
  if (certify && frobenius_power(acc, k) != acc)
    throw std::logic_error("trace_to_subfield: result escaped the subfield");
  return acc;
}

}  // namespace eulerseq
