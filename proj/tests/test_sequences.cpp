#include <cstring>

#include "catch_amalgamated.hpp"
#include "eulerseq/sequences.hpp"

using namespace eulerseq;

namespace {

// Independent minimal-period scan.
u64 least_period_naive(const std::vector<std::uint8_t>& bits) {
  for (u64 t = 1; t < bits.size(); ++t) {
    bool ok = true;
    for (u64 j = 0; j + t < bits.size(); ++j)
      if (bits[j] != bits[j + t]) {
        ok = false;
        break;
      }
    if (ok) return t;
  }
  return bits.size();
}

}  // namespace

TEST_CASE("threshold sequence basics") {
  const Params params(3, 2);
  const BinarySequence seq = generate_threshold(params, 54);
  REQUIRE(seq.bits.size() == 54);
  CHECK(seq.asserted_period == 27);
  CHECK(seq.bits[0] == 0);  // Q(0) = 0 by the p | u convention
  for (u64 u = 0; u < 54; ++u)
    if (u % 3 == 0) CHECK(seq.bits[u] == 0);
}

TEST_CASE("threshold and cyclotomic definitions agree") {
  for (auto [p, r] : {std::pair<u64, unsigned>{3, 1}, {3, 2}, {5, 1}, {5, 2}}) {
    const Params params(p, r);
    const BinarySequence a = generate_threshold(params, params.period);
    const BinarySequence b = generate_cyclotomic(params, params.period);
    INFO("p=" << p << " r=" << r);
    CHECK(a.bits == b.bits);
  }
}

TEST_CASE("worked example positions at (5,3)") {
  const Params params(5, 3);
  const BinarySequence seq = generate_threshold(params, params.period);
  const NormalizedRoot root = find_normalized_root(params);
  const CyclotomicPartition top(params, 3, root.g);
  for (u64 u : top.class_members(17)) CHECK(seq.bits[u] == 0);
  for (u64 u : top.class_members(85)) CHECK(seq.bits[u] == 1);
}

TEST_CASE("indicator sequences") {
  const Params params(3, 2);
  const u64 period = params.period;
  std::vector<std::uint8_t> xor_sum(period, 0);
  for (u64 i = 0; i < 9; ++i) {
    const BinarySequence s = indicator_sequence(params, i, period);
    CHECK(s.bits[0] == 0);
    u64 ones = 0;
    for (u64 u = 0; u < period; ++u) ones += s.bits[u];
    CHECK(ones == params.p - 1);
    if (i >= 5) {  // I = {5, ..., 8} for p^r = 9
      for (u64 u = 0; u < period; ++u) xor_sum[u] ^= s.bits[u];
    }
  }
  const BinarySequence e = generate_threshold(params, period);
  CHECK(xor_sum == e.bits);
  CHECK_THROWS_AS(indicator_sequence(params, 9, period), std::invalid_argument);
}

TEST_CASE("detect_period") {
  Params params(3, 1);
  BinarySequence zeros(params, 5);
  zeros.bits.assign(10, 0);
  CHECK(detect_period(zeros) == 1);

  const Params p32(3, 2);
  const BinarySequence s32 = generate_threshold(p32, 54);
  CHECK(detect_period(s32) == 27);
  CHECK(least_period_naive(s32.bits) == 27);

  const Params p51(5, 1);
  const BinarySequence s51 = generate_threshold(p51, 50);
  CHECK(detect_period(s51) == 25);
  CHECK(least_period_naive(s51.bits) == 25);

  BinarySequence small(p32, p32.period);
  small.bits.assign(27, 0);
  CHECK_THROWS_AS(detect_period(small), std::invalid_argument);
}

TEST_CASE("ESEQ1 ascii round trip and header") {
  const Params params(3, 2);
  const BinarySequence seq = generate_threshold(params, 54);
  std::ostringstream os;
  write_sequence(os, seq, SequenceFormat::ascii);
  const std::string text = os.str();
  CHECK(text.rfind("ESEQ1 p=3 r=2 n=54\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 55);  // header + 54 bits

  std::istringstream is(text);
  const BinarySequence back = read_sequence(is);
  CHECK(back.bits == seq.bits);
  CHECK(back.params.p == 3);
  CHECK(back.params.r_frak == 2);
}

TEST_CASE("ESEQ1 bin round trip is bit exact") {
  const Params params(5, 2);
  const BinarySequence seq = generate_threshold(params, 125);
  std::ostringstream os;
  write_sequence(os, seq, SequenceFormat::bin);
  const std::string blob = os.str();
  const std::string header = "ESEQ1 p=5 r=2 n=125\n";
  REQUIRE(blob.rfind(header, 0) == 0);
  CHECK(blob.size() == header.size() + (125 + 7) / 8);

  // little-endian bit order within each byte
  const unsigned char byte0 = static_cast<unsigned char>(blob[header.size()]);
  for (unsigned j = 0; j < 8; ++j) CHECK(((byte0 >> j) & 1u) == seq.bits[j]);

  std::istringstream is(blob);
  const BinarySequence back = read_sequence(is);
  CHECK(back.bits == seq.bits);
}

TEST_CASE("read_sequence rejects malformed input") {
  std::istringstream bad_header("ESEQX p=3 r=2 n=5\n01010");
  CHECK_THROWS_AS(read_sequence(bad_header), std::runtime_error);
  std::istringstream truncated("ESEQ1 p=3 r=2 n=4\n0\n1\n");
  CHECK_THROWS_AS(read_sequence(truncated), std::runtime_error);
}
