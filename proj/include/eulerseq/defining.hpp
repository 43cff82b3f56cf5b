#pragma once

#include <memory>

#include "gf2.hpp"
#include "quotients.hpp"

namespace eulerseq {

// Raised where the order-of-2 tower law fails and the defining/trace
// construction is out of reach; detection and the two-order profile remain
// available.
struct WieferichError : std::domain_error {
  u64 lambda;
  unsigned t0;
  WieferichError(u64 lambda_, unsigned t0_)
      : std::domain_error("Wieferich prime: trace/defining construction unsupported, "
                          "detection only (lambda=" +
                          std::to_string(lambda_) + ", t0=" + std::to_string(t0_) + ")"),
        lambda(lambda_),
        t0(t0_) {}
};

// Everything needed to evaluate the defining polynomial G and the trace
// form: the ambient field GF(2^(lambda p^r_frak)), a root of unity beta of
// order p^(r_frak+1), the eta coefficient table, and the unit-term parity.
// G is never densified; it lives as (unit_term_parity, eta).
struct DefiningData {
  Params params;
  u64 lambda;
  NormalizedRoot root;
  int unit_term_parity;  // (p^r_frak - 1)/2 mod 2
  std::shared_ptr<const FieldContext> field;
  FieldElement beta;
  std::vector<std::vector<FieldElement>> eta;  // eta[r-1][l], 0 <= l < p^r

  // evaluation caches, all derived from (params, beta, root)
  std::vector<FieldElement> beta_pow;           // beta^t for t < period
  std::vector<u64> g_pow;                       // g^e mod period for e < period
  std::vector<CyclotomicPartition> levels;      // classes mod p^(r+1), index r-1
  std::vector<std::vector<FieldElement>> dtab;  // D_i^(r)(beta^(p^(r_frak-r)))

  DefiningData(Params p, u64 lambda_, NormalizedRoot root_, int parity,
               std::shared_ptr<const FieldContext> field_, FieldElement beta_)
      : params(std::move(p)),
        lambda(lambda_),
        root(root_),
        unit_term_parity(parity),
        field(std::move(field_)),
        beta(std::move(beta_)) {}

  u64 period() const { return params.period; }
};

// D_l^(r)(gamma) = sum of gamma^v over the p-1 class members, by direct
// summation.
inline FieldElement class_poly_eval(const CyclotomicPartition& part, u64 l,
                                    const FieldElement& gamma) {
  FieldElement acc = gamma.context().zero();
  for (u64 v : part.class_members(l)) acc += gamma.pow(v);
  return acc;
}

// All p^r class evaluations at once, through a power table of gamma.
inline std::vector<FieldElement> class_poly_table(const CyclotomicPartition& part,
                                                  const FieldElement& gamma) {
  const u64 m = part.modulus();
  std::vector<FieldElement> gamma_pow;
  gamma_pow.reserve(m);
  FieldElement acc = gamma.context().one();
  for (u64 t = 0; t < m; ++t) {
    gamma_pow.push_back(acc);
    acc *= gamma;
  }
  std::vector<FieldElement> out;
  out.reserve(part.class_count());
  for (u64 l = 0; l < part.class_count(); ++l) {
    FieldElement s = gamma.context().zero();
    for (u64 v : part.class_members(l)) s += gamma_pow[v];
    out.push_back(s);
  }
  return out;
}

inline FieldElement inner_product_from_tables(const std::vector<FieldElement>& ti,
                                              const std::vector<FieldElement>& tj,
                                              u64 i, u64 j) {
  const u64 n = ti.size();
  FieldElement acc = ti[0].context().zero();
  for (u64 k = 0; k < n; ++k) acc += ti[(i + k) % n] * tj[(j + k) % n];
  return acc;
}

// C_i^(r)(theta) . C_j^(r)(theta^(p^m))^T for a primitive p^(r+1)-th root of
// unity theta.
inline FieldElement inner_product(const CyclotomicPartition& part, const FieldElement& theta,
                                  u64 i, u64 j, unsigned m) {
  if (element_order(theta, part.modulus()) != part.modulus())
    throw std::invalid_argument("inner_product: theta must be a primitive p^(r+1)-th root");
  const auto ti = class_poly_table(part, theta);
  const auto tj = class_poly_table(part, theta.pow(checked_pow_u64(part.params().p, m)));
  return inner_product_from_tables(ti, tj, i, j);
}

// Fills every derived member of a DefiningData (power tables, partitions,
// D tables, eta) from (params, beta, root). Shared by construction and
// deserialization so a stored eta table can be revalidated.
inline void populate_derived(DefiningData& dd) {
  const Params& params = dd.params;
  dd.beta_pow.clear();
  dd.beta_pow.reserve(params.period);
  FieldElement acc = dd.field->one();
  for (u64 t = 0; t < params.period; ++t) {
    dd.beta_pow.push_back(acc);
    acc *= dd.beta;
  }
  if (!acc.is_one()) throw std::logic_error("DefiningData: beta order mismatch");

  dd.g_pow.clear();
  dd.g_pow.reserve(params.period);
  u64 gp = 1;
  for (u64 e = 0; e < params.period; ++e) {
    dd.g_pow.push_back(gp);
    gp = mul_mod(gp, dd.root.g, params.period);
  }

  dd.levels.clear();
  for (unsigned r = 1; r <= params.r_frak; ++r)
    dd.levels.emplace_back(params, r, dd.root.g);

  dd.dtab.clear();
  dd.eta.clear();
  for (unsigned r = 1; r <= params.r_frak; ++r) {
    const u64 pr = checked_pow_u64(params.p, r);
    const u64 theta_exp = params.period / params.level_modulus(r);  // p^(r_frak - r)
    std::vector<FieldElement> drow;
    drow.reserve(pr);
    for (u64 i = 0; i < pr; ++i) {
      FieldElement s = dd.field->zero();
      for (u64 v : dd.levels[r - 1].class_members(i))
        s += dd.beta_pow[mul_mod(theta_exp, v, params.period)];
      drow.push_back(s);
    }
    dd.dtab.push_back(std::move(drow));

    std::vector<FieldElement> erow;
    erow.reserve(pr);
    for (u64 l = 0; l < pr; ++l) {
      FieldElement s = dd.field->zero();
      for (u64 i = (pr + 1) / 2; i < pr; ++i) s += dd.dtab[r - 1][(i + l) % pr];
      if (s.is_zero()) throw std::logic_error("DefiningData: vanishing eta coefficient");
      erow.push_back(s);
    }
    dd.eta.push_back(std::move(erow));
  }
}

inline DefiningData build_defining_data(const Params& params,
                                        unsigned max_degree = kMaxFieldDegree) {
  if (is_wieferich(params.p)) {
    const auto prof = two_order_profile(params.p, 1);
    throw WieferichError(prof.lambda, prof.t0);
  }
  const u64 lambda = multiplicative_order(2, params.p);
  const u64 pr_frak = params.period / params.p;
  const u64 degree = lambda * pr_frak;
  if (degree > max_degree)
    throw std::domain_error("build_defining_data: ambient degree " + std::to_string(degree) +
                            " exceeds the ceiling " + std::to_string(max_degree));
  // Lemma-6 guard: the ambient field must contain the p^(r_frak+1)-th roots
  // of unity.
  if (pow_mod(2, degree, params.period) != 1)
    throw std::logic_error("build_defining_data: period does not divide 2^N - 1");

  auto field = std::make_shared<const FieldContext>(static_cast<unsigned>(degree));
  FieldElement beta = primitive_root_of_unity(*field, params.period);
  const NormalizedRoot root = find_normalized_root(params);
  const int parity = static_cast<int>(((pr_frak - 1) / 2) % 2);

  DefiningData dd(params, lambda, root, parity, field, beta);
  populate_derived(dd);
  return dd;
}

// G(beta^u) through the eta-table form of the defining polynomial:
// G(x) = ((p^r_frak-1)/2) sum_k x^(k p^r_frak)
//        + sum_r sum_l eta_l^(r) D_l^(r)(x^(p^(r_frak-r))).
inline int defining_eval(const DefiningData& dd, u64 u) {
  const u64 T = dd.period();
  u %= T;
  FieldElement acc = dd.field->zero();
  if (dd.unit_term_parity) {
    const u64 base = mul_mod(u, T / dd.params.p, T);
    for (u64 k = 1; k < dd.params.p; ++k) acc += dd.beta_pow[mul_mod(base, k, T)];
  }
  for (unsigned r = 1; r <= dd.params.r_frak; ++r) {
    const u64 base = mul_mod(u, T / dd.params.level_modulus(r), T);
    const auto& level = dd.levels[r - 1];
    for (u64 l = 0; l < level.class_count(); ++l) {
      FieldElement t = dd.field->zero();
      for (u64 v : level.class_members(l)) t += dd.beta_pow[mul_mod(base, v, T)];
      if (!t.is_zero()) acc += dd.eta[r - 1][l] * t;
    }
  }
  return acc.as_bit();
}

// G_i(beta^u): the defining polynomial of the indicator sequence of
// D_i^(r_frak) (unit coefficient on the x^(k p^r_frak) block).
inline int indicator_defining_eval(const DefiningData& dd, u64 i, u64 u) {
  const u64 T = dd.period();
  const u64 pr_frak = T / dd.params.p;
  if (i >= pr_frak) throw std::invalid_argument("indicator_defining_eval: class index range");
  u %= T;
  FieldElement acc = dd.field->zero();
  {
    const u64 base = mul_mod(u, pr_frak, T);
    for (u64 k = 1; k < dd.params.p; ++k) acc += dd.beta_pow[mul_mod(base, k, T)];
  }
  for (unsigned r = 1; r <= dd.params.r_frak; ++r) {
    const u64 base = mul_mod(u, T / dd.params.level_modulus(r), T);
    const auto& level = dd.levels[r - 1];
    const u64 pr = level.class_count();
    for (u64 k = 0; k < pr; ++k) {
      FieldElement t = dd.field->zero();
      for (u64 v : level.class_members(k)) t += dd.beta_pow[mul_mod(base, v, T)];
      if (!t.is_zero()) acc += dd.dtab[r - 1][(i + k) % pr] * t;
    }
  }
  return acc.as_bit();
}

// U^(r) = { 2^(j p^r) mod p^(r+1) : 0 <= j < lambda } together with the
// coset leaders g^(k p^r) that tile D_0^(r).
struct CosetDecomposition {
  std::vector<u64> leaders;
  std::vector<u64> subgroup;
};

inline CosetDecomposition coset_decomposition(const Params& params, u64 g, unsigned r) {
  if (is_wieferich(params.p)) {
    const auto prof = two_order_profile(params.p, 1);
    throw WieferichError(prof.lambda, prof.t0);
  }
  const u64 lambda = multiplicative_order(2, params.p);
  const u64 m = params.level_modulus(r);
  const u64 pr = m / params.p;
  CosetDecomposition out;
  for (u64 j = 0; j < lambda; ++j)
    out.subgroup.push_back(pow_mod(2, j * pr, m));
  std::vector<u64> sorted_u = out.subgroup;
  std::sort(sorted_u.begin(), sorted_u.end());
  if (std::adjacent_find(sorted_u.begin(), sorted_u.end()) != sorted_u.end())
    throw std::logic_error("coset_decomposition: subgroup elements collide");
  for (u64 x : out.subgroup)
    if (euler_quotient(x, params.p, r) != 0)
      throw std::logic_error("coset_decomposition: subgroup escapes D_0");

  const u64 coset_count = (params.p - 1) / lambda;
  std::vector<u64> tiled;
  for (u64 k = 0; k < coset_count; ++k) {
    const u64 leader = pow_mod(g, k * pr, m);
    out.leaders.push_back(leader);
    for (u64 x : out.subgroup) tiled.push_back(mul_mod(leader, x, m));
  }
  std::sort(tiled.begin(), tiled.end());
  const CyclotomicPartition part(params, r, g);
  if (tiled != part.class_members(0))
    throw std::logic_error("coset_decomposition: cosets do not tile D_0");
  return out;
}

// Theorem-2 evaluation: e_u as a double sum of subfield traces, computed
// entirely inside the ambient field. The theorem is stated for r_frak >= 2;
// the r_frak = 1 specialization runs only behind allow_r1.
inline int trace_eval(const DefiningData& dd, u64 u, bool allow_r1 = false,
                      bool certify = false) {
  if (dd.params.r_frak < 2 && !allow_r1)
    throw std::invalid_argument(
        "trace_eval: stated for r >= 2; pass the extended flag to run r = 1");
  const u64 T = dd.period();
  const u64 p = dd.params.p;
  const u64 lam = dd.lambda;
  const u64 cosets = (p - 1) / lam;
  u %= T;
  FieldElement acc = dd.field->zero();
  if (dd.unit_term_parity) {
    const u64 base = mul_mod(u, T / p, T);
    for (u64 k = 0; k < cosets; ++k) {
      const u64 e = mul_mod(base, dd.g_pow[k], T);
      acc += trace_to_subfield(dd.beta_pow[e], static_cast<unsigned>(lam), 1, certify);
    }
  }
  for (unsigned r = 1; r <= dd.params.r_frak; ++r) {
    const u64 pr = checked_pow_u64(p, r);
    const u64 base = mul_mod(u, T / dd.params.level_modulus(r), T);
    const unsigned sub = static_cast<unsigned>(pr);
    const unsigned super = static_cast<unsigned>(lam * pr);
    for (u64 l = 0; l < pr; ++l) {
      FieldElement inner = dd.field->zero();
      for (u64 j = 0; j < cosets; ++j) {
        const u64 e = mul_mod(base, dd.g_pow[j * pr + l], T);
        inner += trace_to_subfield(dd.beta_pow[e], super, sub, certify);
      }
      if (!inner.is_zero()) acc += dd.eta[r - 1][l] * inner;
    }
  }
  return acc.as_bit();
}

}  // namespace eulerseq
