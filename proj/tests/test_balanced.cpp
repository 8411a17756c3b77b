#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "npcc/balanced.hpp"
#include "npcc/code.hpp"
#include "npcc/np1cc.hpp"
#include "npcc/perfect.hpp"
#include "npcc/word.hpp"
#include "test_util.hpp"

using namespace npcc;
using namespace npcc::testutil;

namespace {

// Even-weight length-8 words starting with 0, in canonical order — the
// admissible doubling words for the length-16 base pairs.
std::vector<Word> admissible_vs() {
  std::vector<Word> vs;
  for (std::uint32_t m = 0; m < 256; m += 2)
    if (std::popcount(m) % 2 == 0) vs.emplace_back(8, m);
  std::sort(vs.begin(), vs.end());
  return vs;
}

}  // namespace

TEST_CASE("bit sequences parse and print") {
  BitSequence s = BitSequence::parse("00011011 11100100");
  CHECK(s.length == 16);
  CHECK(s.str() == "0001101111100100");
  CHECK(s.bit(0) == 0);
  CHECK(s.bit(3) == 1);
  CHECK(s.bit(15) == 0);
  CHECK_THROWS(s.bit(16));
  CHECK_THROWS(s.bit(-1));

  CHECK(BitSequence::parse("01") == BitSequence::parse(" 0 1 "));
  CHECK_THROWS(BitSequence::parse(""));
  CHECK_THROWS(BitSequence::parse("01x0"));
  CHECK_THROWS(BitSequence::parse(std::string(65, '0')));
}

TEST_CASE("self-duality is complement at half a period") {
  CHECK(is_self_dual(BitSequence::parse("0110")));
  CHECK(is_self_dual(BitSequence::parse("01")));
  CHECK(is_self_dual(BitSequence::parse("00011011 11100100")));
  CHECK_FALSE(is_self_dual(BitSequence::parse("0101")));
  CHECK_FALSE(is_self_dual(BitSequence::parse("0100")));
  CHECK_THROWS(is_self_dual(BitSequence::parse("010")));
}

TEST_CASE("pair construction enforces the half-sequence relationship") {
  BitSequence s1 = BitSequence::parse("00011011 11100100");
  BitSequence s2 = BitSequence::parse("00011010 11100101");
  SelfDualPair p = make_self_dual_pair(s1, s2);
  CHECK(p.window() == 8);
  CHECK(p.first == s1);
  CHECK(p.second == s2);

  CHECK_THROWS(make_self_dual_pair(s1, s1));  // halves must differ at the end
  CHECK_THROWS(make_self_dual_pair(s1, BitSequence::parse("01")));
  // differs in a non-final symbol
  CHECK_THROWS(make_self_dual_pair(s1, BitSequence::parse("00111010 11000101")));
  // first symbol must be 0
  CHECK_THROWS(make_self_dual_pair(BitSequence::parse("1011 0100"),
                                   BitSequence::parse("1010 0101")));
}

TEST_CASE("the four base pairs") {
  std::array<SelfDualPair, 4> bp = base_pairs();
  CHECK(bp[0].first.str() == "0001101111100100");
  CHECK(bp[0].second.str() == "0001101011100101");
  CHECK(bp[1].first.str() == "0100111110110000");
  CHECK(bp[2].first.str() == "0111011110001000");
  CHECK(bp[3].first.str() == "0010001011011101");
  for (const SelfDualPair& p : bp) {
    CHECK(p.window() == 8);
    CHECK(is_self_dual(p.first));
    CHECK(is_self_dual(p.second));
  }
}

TEST_CASE("cyclic windows in start order") {
  std::vector<Word> w1 = windows(BitSequence::parse("0110"), 1);
  REQUIRE(w1.size() == 4);
  CHECK(w1[0] == Word::parse("0"));
  CHECK(w1[1] == Word::parse("1"));
  CHECK(w1[2] == Word::parse("1"));
  CHECK(w1[3] == Word::parse("0"));

  SelfDualPair base = base_pairs()[0];
  std::vector<Word> ws = windows(base.second, 8);
  CHECK(ws.size() == 16);
  CHECK(ws[0] == Word::parse("00011010"));
  CHECK(ws[1] == Word::parse("00110101"));  // shifted by one, wrapping later
  int even = 0, odd = 0;
  for (const Word& w : windows(base.first, 8)) (weight(w) % 2 == 0 ? even : odd)++;
  CHECK(even == 8);
  CHECK(odd == 8);

  CHECK_THROWS(windows(base.first, 0));
  CHECK_THROWS(windows(base.first, 17));
}

TEST_CASE("doubling step reproduces the frozen pair table") {
  SelfDualPair base = base_pairs()[0];
  std::vector<Word> vs = admissible_vs();
  REQUIRE(vs.size() == 64);
  CHECK(vs[0] == Word::parse("00000000"));
  CHECK(vs[1] == Word::parse("00000011"));
  CHECK(vs[59] == Word::parse("01110111"));
  CHECK(vs[60] == Word::parse("01111000"));
  CHECK(vs[63] == Word::parse("01111110"));

  struct Row {
    int pos;  // 1-based position in the admissible order
    const char* first;
    const char* second;
  };
  const Row table[] = {
      {1, "00000000000110111111111111100100", "00000000000110101111111111100101"},
      {2, "00000011000110001111110011100111", "00000011000110011111110011100110"},
      {3, "00000101000111101111101011100001", "00000101000111111111101011100000"},
      {4, "00000110000111011111100111100010", "00000110000111001111100111100011"},
      {5, "00001001000100101111011011101101", "00001001000100111111011011101100"},
      {6, "00001010000100011111010111101110", "00001010000100001111010111101111"},
      {7, "00001100000101111111001111101000", "00001100000101101111001111101001"},
      {8, "00001111000101001111000011101011", "00001111000101011111000011101010"},
      {60, "01110111011011001000100010010011", "01110111011011011000100010010010"},
      {62, "01111011011000001000010010011111", "01111011011000011000010010011110"},
      {63, "01111101011001101000001010011001", "01111101011001111000001010011000"},
      {64, "01111110011001011000000110011010", "01111110011001001000000110011011"},
  };
  for (const Row& row : table) {
    SelfDualPair p = recursion_step(base, vs[static_cast<std::size_t>(row.pos - 1)]);
    CHECK(p.first.str() == row.first);
    CHECK(p.second.str() == row.second);
    CHECK(p.window() == 16);
    // members differ exactly twice, half a period apart
    std::uint64_t diff = p.first.bits ^ p.second.bits;
    CHECK(std::popcount(diff) == 2);
    int lo = std::countr_zero(diff);
    int hi = 63 - std::countl_zero(diff);
    CHECK(hi - lo == 16);
  }

  CHECK_THROWS(recursion_step(base, Word::parse("0000")));      // wrong length
  CHECK_THROWS(recursion_step(base, Word::parse("00000001")));  // odd weight
  CHECK_THROWS(recursion_step(base, Word::parse("10000001")));  // leading 1
  // the 64-bit sequence cap allows one more doubling, then stops
  SelfDualPair doubled = recursion_step(base, vs[0]);
  SelfDualPair big = recursion_step(doubled, Word(16, 0));
  CHECK(big.first.length == 64);
  CHECK_THROWS(recursion_step(big, Word(32, 0)));
}

TEST_CASE("window code of the first base pair") {
  Code c = build_balanced(3);
  CHECK(c.length() == 8);
  CHECK(c.size() == 32);

  Np1ccReport rep = verify_np1cc(c);
  CHECK(rep.is_np1cc);
  CHECK(rep.type == CodeType::A);
  CHECK(rep.k == 16);
  CHECK(is_balanced(c));
  std::vector<long long> counts = type_i_coordinate_counts(c);
  CHECK(counts == std::vector<long long>(8, 2));

  // the window words split into an even and an odd extended translate
  std::vector<Word> ev, od;
  for (const Word& w : c.words()) (weight(w) % 2 == 0 ? ev : od).push_back(w);
  Code even_half(8, std::move(ev)), odd_half(8, std::move(od));
  CHECK(even_half.size() == 16);
  CHECK(odd_half.size() == 16);
  CHECK(classify_extended_translate(even_half) == ExtendedKind::even_translate);
  CHECK(classify_extended_translate(odd_half) == ExtendedKind::odd_translate);

  // zeroing by a codeword keeps the balance
  Code zeroed = zero_translate(c);
  CHECK(zeroed.contains(Word::zero(8)));
  CHECK(is_balanced(zeroed));
}

TEST_CASE("doubled window code at length 16") {
  Code c = build_balanced(4);
  CHECK(c.length() == 16);
  CHECK(c.size() == 4096);  // all window words distinct

  Np1ccReport rep = verify_np1cc(c);
  CHECK(rep.is_np1cc);
  CHECK(rep.type == CodeType::A);
  CHECK(rep.k == 2048);
  CHECK(is_balanced(c));
  std::vector<long long> counts = type_i_coordinate_counts(c);
  CHECK(counts == std::vector<long long>(16, 128));

  CHECK_THROWS(build_balanced(2));
  CHECK_THROWS(build_balanced(5));
}

TEST_CASE("balance is stricter than Type A") {
  Code g = make_glue_a(3);
  CHECK_FALSE(is_balanced(g));  // every pair disagrees on the glued coordinate
  std::vector<long long> counts = type_i_coordinate_counts(g);
  std::vector<long long> expect(8, 0);
  expect[7] = 16;
  CHECK(counts == expect);

  CHECK_THROWS(type_i_coordinate_counts(make_glue_b(3)));  // not Type A
  CHECK_THROWS(type_i_coordinate_counts(make_glue_c(3)));

  // n = 4 cannot balance 2 pairs over 4 coordinates
  CHECK_FALSE(is_balanced(make_glue_a(2)));
}

TEST_CASE("translating to a zeroed code") {
  Code c = Code::from_strings({"100", "011"});
  CHECK(zero_translate(c) == Code::from_strings({"000", "111"}));
  Code h = hamming_code(3);
  CHECK(zero_translate(h) == h);  // already zeroed
  CHECK(zero_translate(translate(h, Word::unit(7, 5))) == h);
}
