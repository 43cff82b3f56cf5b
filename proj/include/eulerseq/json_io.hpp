#pragma once

#include "json.hpp"
#include "verify.hpp"

namespace eulerseq {

inline constexpr const char* kDdSchemaVersion = "eulerseq-dd-v1";
inline constexpr const char* kReportSchemaVersion = "eulerseq-report-v1";

inline std::string fnv1a_hex(const std::string& data) {
  u64 h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string eta_digest(const DefiningData& dd) {
  std::string blob;
  for (const auto& row : dd.eta)
    for (const auto& e : row) blob += e.to_string() + ";";
  return fnv1a_hex(blob);
}

inline nlohmann::json dd_to_json(const DefiningData& dd) {
  nlohmann::json j;
  j["schema"] = kDdSchemaVersion;
  j["p"] = dd.params.p;
  j["r"] = dd.params.r_frak;
  j["lambda"] = dd.lambda;
  j["degree"] = dd.field->degree();
  j["modulus"] = dd.field->modulus_hex();
  j["beta"] = dd.beta.to_string();
  j["g"] = dd.root.g;
  j["witness_order"] = dd.root.witness_order;
  j["unit_term_parity"] = dd.unit_term_parity;
  nlohmann::json eta = nlohmann::json::array();
  for (const auto& row : dd.eta) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& e : row) jr.push_back(e.to_string());
    eta.push_back(jr);
  }
  j["eta"] = eta;
  return j;
}

// Rebuilds a DefiningData from its serialized form. Every stored component
// is revalidated: the modulus is re-certified irreducible, beta must have
// order p^(r+1), g must be a normalized primitive root, and the stored eta
// table must match the one recomputed from (beta, g).
inline DefiningData dd_from_json(const nlohmann::json& j) {
  if (j.value("schema", "") != kDdSchemaVersion)
    throw std::runtime_error("dd_from_json: unexpected schema version");
  const Params params(j.at("p").get<u64>(), j.at("r").get<unsigned>());
  const unsigned degree = j.at("degree").get<unsigned>();
  const u64 lambda = multiplicative_order(2, params.p);
  if (degree != lambda * (params.period / params.p))
    throw std::runtime_error("dd_from_json: degree does not match lambda * p^r");

  const std::string mod_hex = j.at("modulus").get<std::string>();
  const unsigned mod_words = degree / 64 + 1;
  if (mod_hex.size() != 16 * mod_words)
    throw std::runtime_error("dd_from_json: bad modulus length");
  gf2detail::MWords mwords{};
  for (unsigned i = 0; i < mod_words; ++i)
    mwords[i] = std::stoull(mod_hex.substr(16 * (mod_words - 1 - i), 16), nullptr, 16);
  auto field = std::make_shared<const FieldContext>(degree, mwords);

  FieldElement beta = field->element_from_string(j.at("beta").get<std::string>());
  if (element_order(beta, params.period) != params.period)
    throw std::runtime_error("dd_from_json: beta order mismatch");

  const u64 g = j.at("g").get<u64>();
  if (euler_quotient(g, params.p, params.r_frak) != 1)
    throw std::runtime_error("dd_from_json: g is not normalized");
  if (multiplicative_order(g, params.period) != euler_phi(params.period))
    throw std::runtime_error("dd_from_json: g is not primitive");
  const NormalizedRoot root{g, euler_phi(params.period)};

  const int parity = j.at("unit_term_parity").get<int>();
  if (parity != static_cast<int>(((params.period / params.p - 1) / 2) % 2))
    throw std::runtime_error("dd_from_json: unit term parity mismatch");

  DefiningData dd(params, lambda, root, parity, field, beta);
  populate_derived(dd);

  const auto& stored = j.at("eta");
  if (stored.size() != dd.eta.size()) throw std::runtime_error("dd_from_json: eta shape mismatch");
  for (std::size_t r = 0; r < dd.eta.size(); ++r) {
    if (stored[r].size() != dd.eta[r].size())
      throw std::runtime_error("dd_from_json: eta shape mismatch");
    for (std::size_t l = 0; l < dd.eta[r].size(); ++l)
      if (stored[r][l].get<std::string>() != dd.eta[r][l].to_string())
        throw std::runtime_error("dd_from_json: stored eta disagrees with recomputation");
  }
  return dd;
}

inline nlohmann::json check_to_json(const CheckResult& c) {
  nlohmann::json j;
  j["check"] = c.check;
  j["params"] = {{"p", c.p}, {"r", c.r}};
  j["elapsed_ms"] = c.elapsed_ms;
  if (c.skipped) {
    j["skipped"] = *c.skipped;
  } else {
    j["passed"] = c.passed;
    if (!c.passed && !c.counterexample.empty()) j["counterexample"] = c.counterexample;
  }
  if (!c.metrics.empty()) {
    nlohmann::json m;
    for (const auto& [k, v] : c.metrics) m[k] = v;
    j["metrics"] = m;
  }
  return j;
}

// Consolidated analysis document (cmd_report). Wieferich primes keep the
// integer-side fields and mark the field-backed sections skipped.
inline nlohmann::json build_report(const Params& params,
                                   unsigned max_degree = kMaxFieldDegree) {
  const auto start = std::chrono::steady_clock::now();
  nlohmann::json j;
  j["schema"] = kReportSchemaVersion;
  j["params"] = {{"p", params.p}, {"r", params.r_frak}, {"period", params.period}};
  const auto prof = two_order_profile(params.p, params.r_frak + 1);
  j["two_order"] = {{"lambda", prof.lambda}, {"t0", prof.t0}, {"orders", prof.orders}};
  const bool wief = is_wieferich(params.p);
  j["wieferich"] = wief;
  j["property_seed"] = kPropertySeed;
  j["normalized_root"] = find_normalized_root(params).g;
  if (wief) {
    j["field_skipped"] = "wieferich";
  } else {
    const DefiningData dd = build_defining_data(params, max_degree);
    j["field"] = {{"degree", dd.field->degree()},
                  {"modulus", dd.field->modulus_hex()},
                  {"beta", dd.beta.to_string()}};
    j["eta_digest"] = eta_digest(dd);
    const LinearComplexityReport rep = analyze_linear_complexity(params, dd);
    j["linear_complexity"] = {{"bm", rep.bm_value},
                              {"closed_form", rep.closed_form_value},
                              {"weight", rep.weight_value},
                              {"epsilon", rep.epsilon_flag},
                              {"agree", rep.agree},
                              {"r1_from_prior_work", rep.r1_from_prior_work}};
  }
  j["timing_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return j;
}

}  // namespace eulerseq
