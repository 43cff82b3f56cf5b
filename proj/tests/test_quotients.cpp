#include "catch_amalgamated.hpp"
#include "eulerseq/quotients.hpp"

using namespace eulerseq;

namespace {

// Independent oracle: full-size integer power, no mod-p^(2r) shortcut.
u64 euler_quotient_naive(u64 u, u64 p, unsigned r) {
  if (u % p == 0) return 0;
  const u64 pr = checked_pow_u64(p, r);
  const u64 phi = pr / p * (p - 1);
  Big v = 1;
  for (u64 i = 0; i < phi; ++i) v *= u;
  const Big q = (v - 1) / pr;
  return static_cast<u64>(q % pr);
}

u64 order_naive(u64 a, u64 m) {
  u64 x = a % m;
  u64 n = 1;
  while (x != 1) {
    x = mul_mod(x, a, m);
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("euler_quotient examples") {
  CHECK(euler_quotient(10, 5, 1) == 0);  // p | u
  CHECK(euler_quotient(1, 5, 2) == 0);
  CHECK(euler_quotient(3, 5, 1) == 1);  // (3^4 - 1)/5 = 16, 16 mod 5 = 1
  CHECK(euler_quotient_naive(3, 5, 1) == 1);
}

TEST_CASE("euler_quotient matches the full-size oracle") {
  for (auto [p, r] : {std::pair<u64, unsigned>{3, 1},
                      {3, 2},
                      {5, 1},
                      {5, 2},
                      {7, 1}}) {
    const u64 m = checked_pow_u64(p, r + 1);
    for (u64 u = 0; u < m; ++u) {
      INFO("p=" << p << " r=" << r << " u=" << u);
      CHECK(euler_quotient(u, p, r) == euler_quotient_naive(u, p, r));
    }
  }
}

TEST_CASE("euler_quotient is well defined modulo p^(r+1)") {
  for (auto [p, r] : {std::pair<u64, unsigned>{3, 2}, {5, 2}}) {
    const u64 m = checked_pow_u64(p, r + 1);
    for (u64 u = 1; u < m; ++u) {
      if (u % p == 0) continue;
      CHECK(euler_quotient(u, p, r) == euler_quotient(u + m, p, r));
      CHECK(euler_quotient(u, p, r) == euler_quotient(u + 7 * m, p, r));
    }
  }
}

TEST_CASE("euler_quotient of -1 vanishes") {
  // Used silently in the Lemma 4 derivation; verified rather than assumed.
  for (auto [p, r] : {std::pair<u64, unsigned>{3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}}) {
    const u64 m = checked_pow_u64(p, r + 1);
    CHECK(euler_quotient(m - 1, p, r) == 0);
  }
}

TEST_CASE("euler_quotient validation") {
  CHECK_THROWS_AS(euler_quotient(3, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(euler_quotient(3, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(euler_quotient(3, 5, 0), std::invalid_argument);
}

TEST_CASE("multiplicative_order examples") {
  CHECK(multiplicative_order(1, 7) == 1);
  CHECK(multiplicative_order(2, 5) == 4);
  CHECK(order_naive(2, 5) == 4);
  CHECK(multiplicative_order(2, 27) == 18);
  CHECK(order_naive(2, 27) == 18);
  CHECK_THROWS_AS(multiplicative_order(6, 27), std::invalid_argument);
}

TEST_CASE("multiplicative_order matches brute force on odd moduli") {
  for (u64 m : {9ull, 25ull, 27ull, 49ull, 125ull, 81ull}) {
    for (u64 a = 2; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      CHECK(multiplicative_order(a, m) == order_naive(a, m));
    }
  }
}

TEST_CASE("find_normalized_root postconditions") {
  for (auto [p, r] : {std::pair<u64, unsigned>{3, 1}, {3, 2}, {3, 3}, {5, 1},
                      {5, 2}, {7, 1}, {7, 2}}) {
    const Params params(p, r);
    const NormalizedRoot root = find_normalized_root(params);
    INFO("p=" << p << " r=" << r << " g=" << root.g);
    CHECK(root.witness_order == euler_phi(params.period));
    CHECK(multiplicative_order(root.g, params.period) == root.witness_order);
    CHECK(euler_quotient(root.g, p, r) == 1);
    // Q_s(g) = 1 cascades down every level.
    for (unsigned s = 1; s <= r; ++s) CHECK(euler_quotient(root.g, p, s) == 1);
  }
}

TEST_CASE("find_normalized_root golden values") {
  // Smallest primitive root mod 9 is 2 and Q_1(2) = 1 already.
  CHECK(find_normalized_root(Params(3, 1)).g == 2);
  // g = 2 mod 27 has Q_2(2) = 7; the adjusted exponent is 4 + 9 = 13.
  CHECK(find_normalized_root(Params(3, 2)).g == 11);
  CHECK(find_normalized_root(Params(5, 1)).g == 3);
  CHECK(find_normalized_root(Params(5, 2)).g == 3);
}

TEST_CASE("normalized root for (3,2) agrees with exhaustive search") {
  const Params params(3, 2);
  const NormalizedRoot root = find_normalized_root(params);
  std::vector<u64> valid;
  for (u64 x = 1; x < 27; ++x) {
    if (x % 3 == 0) continue;
    if (multiplicative_order(x, 27) != 18) continue;
    if (euler_quotient(x, 3, 2) != 1) continue;
    valid.push_back(x);
  }
  CHECK(!valid.empty());
  CHECK(std::find(valid.begin(), valid.end(), root.g) != valid.end());
}

TEST_CASE("class_index worked example at (5,3)") {
  const Params params(5, 3);
  const NormalizedRoot root = find_normalized_root(params);
  const CyclotomicPartition top(params, 3, root.g);
  for (u64 u : top.class_members(17)) {
    CHECK(class_index(u, params, 1) == 2);    // 17 mod 5
    CHECK(class_index(u, params, 2) == 17);   // 17 mod 25
    CHECK(class_index(u, params, 3) == 17);
  }
  for (u64 u : top.class_members(85)) {
    CHECK(class_index(u, params, 1) == 0);
    CHECK(class_index(u, params, 2) == 10);   // 85 mod 25
  }
  CHECK(!class_index(5, params, 1).has_value());
  CHECK(!class_index(0, params, 2).has_value());
}

TEST_CASE("partition structure at (3,2)") {
  const Params params(3, 2);
  const CyclotomicPartition part(params, 2, find_normalized_root(params).g);
  REQUIRE(part.class_count() == 9);
  std::vector<u64> all;
  for (u64 l = 0; l < 9; ++l) {
    REQUIRE(part.class_members(l).size() == 2);
    for (u64 x : part.class_members(l)) {
      CHECK(part.class_of(x) == l);
      all.push_back(x);
    }
  }
  std::sort(all.begin(), all.end());
  CHECK(all.size() == 18);
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  // wrap-around indexing D_{l+p^r} = D_l
  CHECK(part.class_members(9) == part.class_members(0));
}

TEST_CASE("two_order_profile") {
  const auto p3 = two_order_profile(3, 3);
  CHECK(p3.lambda == 2);
  CHECK(p3.t0 == 1);
  CHECK(p3.orders == std::vector<u64>{2, 6, 18});

  const auto p5 = two_order_profile(5, 2);
  CHECK(p5.lambda == 4);
  CHECK(p5.t0 == 1);
  CHECK(p5.orders == std::vector<u64>{4, 20});

  const auto w = two_order_profile(1093, 2);
  CHECK(w.lambda == 364);
  CHECK(w.t0 == 2);
  CHECK(w.orders == std::vector<u64>{364, 364});
}

TEST_CASE("is_wieferich") {
  CHECK(is_wieferich(1093));
  CHECK(is_wieferich(3511));
  CHECK_FALSE(is_wieferich(3));
  CHECK_FALSE(is_wieferich(5));
  CHECK_THROWS_AS(is_wieferich(4), std::invalid_argument);
}

TEST_CASE("Params validation") {
  CHECK_THROWS_WITH(Params(4, 1), "p must be an odd prime");
  CHECK_THROWS_AS(Params(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(Params(5, 0), std::invalid_argument);
  const Params ok(5, 3);
  CHECK(ok.period == 625);
  CHECK(ok.modulus_levels == std::vector<u64>{25, 125, 625});
}
