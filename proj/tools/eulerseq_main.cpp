// Command-line front end: sequence generation, identity verification, and
// consolidated analysis reports.
//
// Exit codes: 0 success, 2 invalid parameters, 3 I/O failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "eulerseq/eulerseq.hpp"

namespace {

constexpr eulerseq::u64 kCountCeiling = 1000000;

unsigned resolve_max_degree(unsigned flag_value, bool flag_given) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("EULERSEQ_MAX_DEGREE")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    std::cerr << "warning: ignoring malformed EULERSEQ_MAX_DEGREE\n";
  }
  return eulerseq::kMaxFieldDegree;
}

int write_text_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open " << out_path << "\n";
    return 3;
  }
  os << text;
  if (!os) {
    std::cerr << "error: write failure on " << out_path << "\n";
    return 3;
  }
  return 0;
}

int cmd_generate(eulerseq::u64 p, unsigned r, eulerseq::u64 n, const std::string& format,
                 const std::string& out_path) {
  if (n > kCountCeiling) {
    std::cerr << "error: count exceeds the ceiling " << kCountCeiling << "\n";
    return 2;
  }
  eulerseq::SequenceFormat fmt;
  if (format == "ascii") {
    fmt = eulerseq::SequenceFormat::ascii;
  } else if (format == "bin") {
    fmt = eulerseq::SequenceFormat::bin;
  } else {
    std::cerr << "error: format must be ascii or bin\n";
    return 2;
  }
  const eulerseq::Params params(p, r);
  const eulerseq::BinarySequence seq = eulerseq::generate_threshold(params, n);
  try {
    if (out_path.empty()) {
      eulerseq::write_sequence(std::cout, seq, fmt);
    } else {
      eulerseq::write_sequence_file(out_path, seq, fmt);
    }
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

int cmd_verify(eulerseq::u64 p, unsigned r, eulerseq::VerifyToggles toggles,
               unsigned max_degree, const std::string& out_path) {
  const eulerseq::Params params(p, r);
  if (!toggles.lemmas && !toggles.defining && !toggles.trace && !toggles.lincomp)
    toggles = {true, true, true, true};

  const bool wief = eulerseq::is_wieferich(params.p);
  if (!wief) {
    const eulerseq::u64 degree =
        eulerseq::multiplicative_order(2, params.p) * (params.period / params.p);
    if (degree > max_degree) {
      std::cerr << "error: ambient degree " << degree << " exceeds the ceiling "
                << max_degree << " (raise --max-degree or EULERSEQ_MAX_DEGREE)\n";
      return 2;
    }
  } else {
    std::cerr << "warning: " << params.p
              << " is a Wieferich prime; field-backed checks are skipped\n";
  }

  const auto results = eulerseq::run_verify(params, toggles, max_degree);
  bool all_passed = true;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : results) {
    checks.push_back(eulerseq::check_to_json(c));
    if (!c.skipped && !c.passed) all_passed = false;
  }
  nlohmann::json j;
  j["command"] = "verify";
  j["params"] = {{"p", params.p}, {"r", params.r_frak}};
  j["checks"] = checks;
  j["all_passed"] = all_passed;
  const int io = write_text_output(out_path, j.dump(2) + "\n");
  if (io != 0) return io;
  return all_passed ? 0 : 1;
}

int cmd_report(eulerseq::u64 p, unsigned r, unsigned max_degree, const std::string& out_path) {
  const eulerseq::Params params(p, r);
  const nlohmann::json j = eulerseq::build_report(params, max_degree);
  return write_text_output(out_path, j.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler-quotient binary threshold sequences: generation, verification, reports"};
  app.require_subcommand(1);

  eulerseq::u64 p = 0;
  unsigned r = 1;
  eulerseq::u64 n = 0;
  std::string format = "ascii";
  std::string out_path;
  unsigned max_degree = eulerseq::kMaxFieldDegree;

  auto* gen = app.add_subcommand("generate", "Write one ESEQ1 sequence file");
  gen->add_option("-p", p, "odd prime p")->required();
  gen->add_option("-r", r, "exponent r (period p^(r+1))")->required();
  gen->add_option("-n,--count", n, "number of bits")->required();
  gen->add_option("--format", format, "ascii or bin");
  gen->add_option("--out", out_path, "output path (stdout if omitted)");

  auto* ver = app.add_subcommand("verify", "Run identity checks, print a JSON report");
  ver->add_option("-p", p, "odd prime p")->required();
  ver->add_option("-r", r, "exponent r")->required();
  bool all = false;
  eulerseq::VerifyToggles toggles;
  ver->add_flag("--all", all, "run every check group");
  ver->add_flag("--lemmas", toggles.lemmas, "class algebra and quotient laws");
  ver->add_flag("--defining", toggles.defining, "defining pair identities");
  ver->add_flag("--trace", toggles.trace, "trace representation identity");
  ver->add_flag("--lincomp", toggles.lincomp, "linear complexity triple agreement");
  auto* ver_md = ver->add_option("--max-degree", max_degree, "ambient degree ceiling");
  ver->add_option("--out", out_path, "output path (stdout if omitted)");

  auto* rep = app.add_subcommand("report", "Consolidated JSON analysis document");
  rep->add_option("-p", p, "odd prime p")->required();
  rep->add_option("-r", r, "exponent r")->required();
  auto* rep_md = rep->add_option("--max-degree", max_degree, "ambient degree ceiling");
  rep->add_option("--out", out_path, "output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_generate(p, r, n, format, out_path);
    if (ver->parsed()) {
      if (all) toggles = {true, true, true, true};
      return cmd_verify(p, r, toggles, resolve_max_degree(max_degree, ver_md->count() > 0),
                        out_path);
    }
    if (rep->parsed())
      return cmd_report(p, r, resolve_max_degree(max_degree, rep_md->count() > 0), out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
