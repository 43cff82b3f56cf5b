#include <map>
#include <random>

#include "catch_amalgamated.hpp"
#include "eulerseq/lincomp.hpp"

using namespace eulerseq;

namespace {

// Textbook O(n^2) Berlekamp-Massey on bytes, as an independent reference.
u64 bm_reference(const std::vector<std::uint8_t>& s) {
  const std::size_t n = s.size();
  std::vector<std::uint8_t> c(n + 1, 0), b(n + 1, 0);
  c[0] = b[0] = 1;
  u64 len = 0;
  std::size_t m = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t d = s[i];
    for (u64 j = 1; j <= len; ++j) d ^= static_cast<std::uint8_t>(c[j] & s[i - j]);
    if (d == 0) {
      ++m;
    } else if (2 * len <= i) {
      const std::vector<std::uint8_t> t = c;
      for (std::size_t j = 0; j + m <= n; ++j) c[j + m] ^= b[j];
      len = i + 1 - len;
      b = t;
      m = 1;
    } else {
      for (std::size_t j = 0; j + m <= n; ++j) c[j + m] ^= b[j];
      ++m;
    }
  }
  return len;
}

// Dense materialization of G as an exponent -> coefficient map; test-only
// oracle for the weight count and for spot evaluations.
std::map<u64, FieldElement> densify_G(const DefiningData& dd) {
  std::map<u64, FieldElement> coeff;
  const u64 T = dd.period();
  const u64 pr_frak = T / dd.params.p;
  if (dd.unit_term_parity) {
    for (u64 k = 1; k < dd.params.p; ++k)
      coeff.insert({k * pr_frak, dd.field->one()});
  }
  for (unsigned r = 1; r <= dd.params.r_frak; ++r) {
    const u64 scale = T / dd.params.level_modulus(r);  // p^(r_frak - r)
    const auto& level = dd.levels[r - 1];
    for (u64 l = 0; l < level.class_count(); ++l)
      for (u64 v : level.class_members(l)) {
        auto [it, fresh] = coeff.insert({v * scale, dd.eta[r - 1][l]});
        if (!fresh) it->second += dd.eta[r - 1][l];
      }
  }
  return coeff;
}

}  // namespace

TEST_CASE("berlekamp_massey basics") {
  CHECK(berlekamp_massey(std::vector<std::uint8_t>(10, 0)).length == 0);
  CHECK(berlekamp_massey(std::vector<std::uint8_t>(8, 1)).length == 1);
  CHECK_THROWS_AS(berlekamp_massey({}), std::invalid_argument);
}

TEST_CASE("berlekamp_massey agrees with the reference on random input") {
  std::mt19937_64 rng(0xb3a55e);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 200);
    std::vector<std::uint8_t> s(n);
    for (auto& b : s) b = static_cast<std::uint8_t>(rng() & 1);
    const auto got = berlekamp_massey(s);
    CHECK(got.length == bm_reference(s));
    for (std::size_t i = 1; i < got.profile.size(); ++i)
      CHECK(got.profile[i] >= got.profile[i - 1]);
  }
}

TEST_CASE("berlekamp_massey connection polynomial regenerates the input") {
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 20 + static_cast<std::size_t>(rng() % 100);
    std::vector<std::uint8_t> s(n);
    for (auto& b : s) b = static_cast<std::uint8_t>(rng() & 1);
    const auto res = berlekamp_massey(s);
    for (std::size_t i = res.length; i < n; ++i) {
      std::uint8_t acc = 0;
      for (u64 j = 0; j <= res.length; ++j) {
        const std::uint8_t cj = (res.connection[j / 64] >> (j % 64)) & 1u;
        acc ^= static_cast<std::uint8_t>(cj & s[i - j]);
      }
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("epsilon") {
  CHECK(epsilon(4) == 0);
  CHECK(epsilon(13) == 1);
  CHECK(epsilon((125 - 1) / 2) == 0);  // the vanishing 62 coefficient
}

TEST_CASE("closed form values") {
  CHECK(closed_form_lc(Params(5, 2)) == 120);  // p = 1 mod 4
  CHECK(closed_form_lc(Params(3, 2)) == 24);   // p = 3 mod 4, r even
  CHECK(closed_form_lc(Params(3, 3)) == 80);   // p = 3 mod 4, r odd
  CHECK(closed_form_lc(Params(5, 1)) == 20);
  CHECK_THROWS_AS(closed_form_lc(Params(1093, 1)), WieferichError);
}

TEST_CASE("BM on the doubled period matches the closed form") {
  const Params params(3, 2);
  const BinarySequence seq = generate_threshold(params, 2 * params.period);
  CHECK(berlekamp_massey(seq.bits).length == 24);
}

TEST_CASE("weight of G") {
  const DefiningData dd32 = build_defining_data(Params(3, 2));
  CHECK(weight_of_G(dd32) == 24);  // 0 + 2 * (3 + 9)
  const DefiningData dd33 = build_defining_data(Params(3, 3));
  CHECK(weight_of_G(dd33) == 80);  // 2 * 1 + 2 * (3 + 9 + 27)
  const DefiningData dd52 = build_defining_data(Params(5, 2));
  CHECK(weight_of_G(dd52) == 120);  // 0 + 4 * (5 + 25)
}

TEST_CASE("dense materialization confirms the weight and the evaluations") {
  const Params params(3, 2);
  const DefiningData dd = build_defining_data(params);
  const auto dense = densify_G(dd);
  u64 weight = 0;
  for (const auto& [e, c] : dense) {
    CHECK(e < params.period);
    if (!c.is_zero()) ++weight;
  }
  CHECK(weight == weight_of_G(dd));
  // Evaluate G directly from the dense form at a few points.
  for (u64 u : {u64{0}, u64{1}, u64{2}, u64{5}, u64{9}, u64{13}, u64{26}}) {
    FieldElement val = dd.field->zero();
    for (const auto& [e, c] : dense) val += c * dd.beta_pow[mul_mod(e, u, params.period)];
    CHECK(val.as_bit() == defining_eval(dd, u));
  }
}

TEST_CASE("triple agreement report") {
  for (auto [p, r] : {std::pair<u64, unsigned>{3, 1}, {3, 2}, {3, 3}, {5, 1},
                      {5, 2}, {7, 1}, {7, 2}}) {
    const Params params(p, r);
    const DefiningData dd = build_defining_data(params);
    const LinearComplexityReport rep = analyze_linear_complexity(params, dd);
    INFO("p=" << p << " r=" << r);
    CHECK(rep.agree);
    CHECK(rep.bm_value == rep.closed_form_value);
    CHECK(2 * rep.closed_form_value >= params.period);
    CHECK(rep.r1_from_prior_work == (r == 1));
  }
}
