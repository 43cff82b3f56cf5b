#pragma once

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "quotients.hpp"

namespace eulerseq {

// One window of the binary threshold sequence (e_u). Bits are stored one per
// byte in memory; the packed layout is a file-format concern only.
struct BinarySequence {
  std::vector<std::uint8_t> bits;
  u64 asserted_period = 0;
  Params params;

  BinarySequence(Params p, u64 period) : asserted_period(period), params(std::move(p)) {}
};

// e_u = 0 iff Q_r_frak(u) < p^r_frak / 2, by exact integer comparison.
inline BinarySequence generate_threshold(const Params& params, u64 count) {
  BinarySequence seq(params, params.period);
  seq.bits.reserve(count);
  const u64 pr = params.period / params.p;  // p^r_frak
  const u64 window = std::min(count, params.period);
  std::vector<std::uint8_t> one_period;
  one_period.reserve(window);
  for (u64 u = 0; u < window; ++u) {
    const u64 q = euler_quotient(u, params.p, params.r_frak);
    one_period.push_back(2 * q < pr ? 0 : 1);
  }
  for (u64 u = 0; u < count; ++u) seq.bits.push_back(one_period[u % params.period]);
  return seq;
}

// Equivalent definition through class membership: e_u = 1 iff u mod p^(r+1)
// lies in D_l^(r_frak) for some l in I = [(p^r_frak+1)/2, p^r_frak - 1].
// The class walk uses only the normalized root g, which makes this an
// independent route from the threshold form.
inline BinarySequence generate_cyclotomic(const Params& params, u64 count) {
  BinarySequence seq(params, params.period);
  seq.bits.reserve(count);
  const u64 pr = params.period / params.p;
  const u64 lo = (pr + 1) / 2;  // I = [lo, pr)
  const NormalizedRoot root = find_normalized_root(params);
  std::vector<std::uint8_t> member(params.period, 0);
  const u64 phi = params.period - params.period / params.p;
  u64 x = 1;
  for (u64 k = 0; k < phi; ++k) {
    const u64 l = k % pr;
    if (l >= lo) member[x] = 1;
    x = mul_mod(x, root.g, params.period);
  }
  for (u64 u = 0; u < count; ++u) seq.bits.push_back(member[u % params.period]);
  return seq;
}

// Characteristic sequence of the class D_i^(r_frak).
inline BinarySequence indicator_sequence(const Params& params, u64 i, u64 count) {
  const u64 pr = params.period / params.p;
  if (i >= pr) throw std::invalid_argument("indicator_sequence: class index out of range");
  BinarySequence seq(params, params.period);
  seq.bits.reserve(count);
  const NormalizedRoot root = find_normalized_root(params);
  std::vector<std::uint8_t> member(params.period, 0);
  const u64 phi = params.period - params.period / params.p;
  u64 x = 1;
  for (u64 k = 0; k < phi; ++k) {
    if (k % pr == i) member[x] = 1;
    x = mul_mod(x, root.g, params.period);
  }
  for (u64 u = 0; u < count; ++u) seq.bits.push_back(member[u % params.period]);
  return seq;
}

// Least period of the stored window. Requires at least two asserted periods
// of data so that a short window cannot masquerade as a shorter period.
inline u64 detect_period(const BinarySequence& seq) {
  const u64 n = seq.bits.size();
  if (seq.asserted_period == 0 || n < 2 * seq.asserted_period)
    throw std::invalid_argument("detect_period: insufficient data");
  for (u64 t = 1; t < n; ++t) {
    bool ok = true;
    for (u64 j = 0; j + t < n; ++j) {
      if (seq.bits[j] != seq.bits[j + t]) {
        ok = false;
        break;
      }
    }
    if (ok) return t;
  }
  return n;
}

enum class SequenceFormat { ascii, bin };

// ESEQ1 file format: header line `ESEQ1 p=<p> r=<r> n=<count>`, then either
// one ASCII 0/1 line per bit or packed bytes (8 bits per byte, little-endian
// bit order within each byte).
inline void write_sequence(std::ostream& os, const BinarySequence& seq, SequenceFormat fmt) {
  os << "ESEQ1 p=" << seq.params.p << " r=" << seq.params.r_frak
     << " n=" << seq.bits.size() << "\n";
  if (fmt == SequenceFormat::ascii) {
    for (auto b : seq.bits) os << (b ? '1' : '0') << "\n";
  } else {
    std::string packed((seq.bits.size() + 7) / 8, '\0');
    for (u64 u = 0; u < seq.bits.size(); ++u)
      if (seq.bits[u]) packed[u / 8] |= static_cast<char>(1u << (u % 8));
    os.write(packed.data(), static_cast<std::streamsize>(packed.size()));
  }
  if (!os) throw std::runtime_error("write_sequence: stream failure");
}

inline BinarySequence read_sequence(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw std::runtime_error("read_sequence: missing header");
  unsigned long long p = 0, r = 0, n = 0;
  if (std::sscanf(header.c_str(), "ESEQ1 p=%llu r=%llu n=%llu", &p, &r, &n) != 3)
    throw std::runtime_error("read_sequence: malformed header");
  Params params(static_cast<u64>(p), static_cast<unsigned>(r));
  BinarySequence seq(params, params.period);
  std::string rest((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  const u64 packed_size = (n + 7) / 8;
  if (rest.size() == packed_size && n > 0) {
    for (u64 u = 0; u < n; ++u)
      seq.bits.push_back((static_cast<unsigned char>(rest[u / 8]) >> (u % 8)) & 1u);
  } else {
    std::istringstream lines(rest);
    std::string line;
    while (seq.bits.size() < n && std::getline(lines, line)) {
      if (line.empty()) continue;
      if (line != "0" && line != "1") throw std::runtime_error("read_sequence: bad ascii bit");
      seq.bits.push_back(line == "1" ? 1 : 0);
    }
    if (seq.bits.size() != n) throw std::runtime_error("read_sequence: truncated payload");
  }
  return seq;
}

inline void write_sequence_file(const std::string& path, const BinarySequence& seq,
                                SequenceFormat fmt) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_sequence_file: cannot open " + path);
  write_sequence(os, seq, fmt);
}

inline BinarySequence read_sequence_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_sequence_file: cannot open " + path);
  return read_sequence(is);
}

}  // namespace eulerseq
