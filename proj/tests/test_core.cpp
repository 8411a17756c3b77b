#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "npcc/bounds.hpp"
#include "npcc/code.hpp"
#include "npcc/rational.hpp"
#include "npcc/word.hpp"
#include "test_util.hpp"

using namespace npcc;

TEST_CASE("word parse/str round trip and coordinate order") {
  Word w = Word::parse("10000000");
  CHECK(w.length() == 8);
  CHECK(w.bit(1) == true);   // coordinate 1 is the leftmost symbol
  CHECK(w.bit(8) == false);
  CHECK(w.bits() == 1u);     // ... and the lowest stored bit
  CHECK(w.str() == "10000000");

  Word v = Word::parse("00000001");
  CHECK(v.bits() == 0x80u);
  CHECK(v.bit(8) == true);
  CHECK(Word(8, 0x80u).str() == "00000001");
}

TEST_CASE("word constructors and errors") {
  CHECK(Word::zero(5).str() == "00000");
  CHECK(Word::unit(5, 1).str() == "10000");
  CHECK(Word::unit(5, 5).str() == "00001");
  CHECK_THROWS_AS(Word::parse("01012"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse(std::string(33, '0')), std::invalid_argument);
  CHECK_THROWS_AS(Word(4, 0x10u), std::invalid_argument);  // bit beyond length
  CHECK_THROWS_AS(Word::unit(4, 5), std::out_of_range);
}

TEST_CASE("canonical key and ordering follow the textual value") {
  // 0111 reads as a smaller binary numeral than 1000.
  CHECK(Word::parse("0111").canonical_key() == 7u);
  CHECK(Word::parse("1000").canonical_key() == 8u);
  CHECK(Word::parse("0111") < Word::parse("1000"));

  std::vector<Word> ws = {Word::parse("1000"), Word::parse("0001"),
                          Word::parse("1111"), Word::parse("0000")};
  std::sort(ws.begin(), ws.end());
  CHECK(ws[0].str() == "0000");
  CHECK(ws[1].str() == "0001");
  CHECK(ws[2].str() == "1000");
  CHECK(ws[3].str() == "1111");
}

TEST_CASE("weight, parity, distance, flips") {
  Word a = Word::parse("1101");
  CHECK(weight(a) == 3);
  CHECK(parity(a) == 1);
  CHECK(weight(Word::zero(7)) == 0);
  CHECK(distance(Word::parse("1100"), Word::parse("0110")) == 2);
  CHECK(a.flipped(2).str() == "1001");
  CHECK(a.complemented().str() == "0010");
  CHECK((Word::parse("1100") ^ Word::parse("0110")).str() == "1010");
}

TEST_CASE("balls and spheres have the right sizes and ordering") {
  Word x = Word::parse("01100110");
  auto b1 = ball(x, 1);
  CHECK(b1.size() == 9);  // 1 + n
  CHECK(std::is_sorted(b1.begin(), b1.end()));
  auto s2 = sphere(x, 2);
  CHECK(s2.size() == 28);  // C(8,2)
  auto b2 = ball(x, 2);
  CHECK(b2.size() == 1 + 8 + 28);
  CHECK(std::adjacent_find(b2.begin(), b2.end()) == b2.end());  // distinct
  CHECK(ball(x, 0).size() == 1);
}

TEST_CASE("fixed-weight mask enumeration is complete and ascending") {
  std::vector<std::uint32_t> masks;
  for_each_mask_of_weight(8, 2, [&](std::uint32_t m) { masks.push_back(m); });
  CHECK(masks.size() == 28);
  CHECK(std::is_sorted(masks.begin(), masks.end()));
  for (std::uint32_t m : masks) CHECK(std::popcount(m) == 2);

  int zero_count = 0;
  for_each_mask_of_weight(8, 0, [&](std::uint32_t m) {
    ++zero_count;
    CHECK(m == 0u);
  });
  CHECK(zero_count == 1);

  int none = 0;
  for_each_mask_of_weight(3, 4, [&](std::uint32_t) { ++none; });
  CHECK(none == 0);
}

TEST_CASE("code parsing: header, comments, duplicates, mixed lengths") {
  Code c = Code::parse_text("# n=4\n# a comment\n\n0001\n1110\n");
  CHECK(c.length() == 4);
  CHECK(c.size() == 2);
  CHECK(c.contains(Word::parse("0001")));

  CHECK_THROWS(Code::parse_text("0001\n0001\n"));       // duplicate line
  CHECK_THROWS(Code::parse_text("0001\n01\n"));         // mixed lengths
  CHECK_THROWS(Code::parse_text("# n=5\n0001\n"));      // header mismatch
  CHECK_THROWS(Code::parse_text(""));                   // nothing at all
  CHECK(Code::parse_text("# n=3\n").length() == 3);     // empty but typed
  CHECK(Code::parse_text("# n=3\n").empty());

  // Windows line endings are tolerated.
  Code crlf = Code::parse_text("# n=2\r\n01\r\n10\r\n");
  CHECK(crlf.size() == 2);
}

TEST_CASE("code keeps words sorted and deduplicated") {
  Code c = Code::from_strings({"1000", "0001", "1000"});
  CHECK(c.size() == 2);
  CHECK(c.word(0).str() == "0001");
  CHECK(c.word(1).str() == "1000");
  CHECK(c.serialize() == "# n=4\n0001\n1000\n");
}

TEST_CASE("code save/load round trip") {
  Code c = testutil::make_glue_a(2);
  std::string path = "core_roundtrip.code";
  c.save(path);
  Code back = Code::load(path);
  CHECK(back == c);
  std::remove(path.c_str());
  CHECK_THROWS(Code::load("does_not_exist.code"));
}

TEST_CASE("translate and union") {
  Code c = Code::from_strings({"000", "111"});
  Code t = translate(c, Word::parse("100"));
  CHECK(t.contains(Word::parse("100")));
  CHECK(t.contains(Word::parse("011")));
  CHECK_THROWS(translate(c, Word::parse("0000")));  // length mismatch

  Code u = code_union(c, t);
  CHECK(u.size() == 4);
  CHECK_THROWS(code_union(c, Code::from_strings({"0000"})));
  CHECK(code_union(c, c) == c);  // set semantics: overlap collapses
}

TEST_CASE("exact binomials and powers") {
  CHECK(binomial(8, 4) == 70);
  CHECK(binomial(17, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(64, 32) == Int("1832624140942590534"));
  CHECK(pow2(10) == 1024);
  CHECK(is_integer(Rational(6, 3)));
  CHECK(!is_integer(Rational(1, 3)));
  CHECK(to_integer(Rational(6, 3)) == 2);
}

TEST_CASE("ball-sum bounds at radius 1") {
  // Upper bounds that a perfect 16-word length-7 code meets exactly.
  BoundReport sp = bound(BoundName::sphere_packing, 7, 1, Int(16));
  CHECK(sp.value == Rational(16));
  CHECK(sp.direction == BoundDirection::upper);
  CHECK(sp.satisfied);

  BoundReport j7 = bound(BoundName::johnson, 7, 1, Int(16));
  CHECK(j7.value == Rational(16));
  CHECK(j7.satisfied);

  // Length 8: the refined upper bound drops below 2^8/9.
  BoundReport j8 = bound(BoundName::johnson, 8, 1, Int(32));
  CHECK(j8.value == Rational(128, 5));
  CHECK(!j8.satisfied);  // 32 > 128/5

  BoundReport sc = bound(BoundName::sphere_covering, 8, 1, Int(32));
  CHECK(sc.value == Rational(256, 9));
  CHECK(sc.direction == BoundDirection::lower);
  CHECK(sc.satisfied);

  // Lower bounds met with equality at length 8, size 32.
  BoundReport st = bound(BoundName::struik, 8, 1, Int(32));
  CHECK(st.value == Rational(32));
  CHECK(st.direction == BoundDirection::lower);
  CHECK(st.satisfied);

  BoundReport vw = bound(BoundName::van_wee, 8, 1, Int(32));
  CHECK(vw.value == Rational(32));
  CHECK(vw.satisfied);
  CHECK(!bound(BoundName::van_wee, 8, 1, Int(31)).satisfied);
}

TEST_CASE("bound preconditions") {
  CHECK_THROWS(bound(BoundName::van_wee, 7, 1, Int(16)));  // odd length
  CHECK_THROWS(bound(BoundName::van_wee, 8, 2, Int(16)));  // radius != 1
  CHECK_THROWS(bound(BoundName::johnson, 8, 8, Int(1)));   // R >= n
  CHECK_THROWS(bound(BoundName::johnson, 8, -1, Int(1)));
  CHECK_THROWS(bound(BoundName::sphere_packing, 0, 0, Int(1)));
}

TEST_CASE("bound names round trip") {
  for (BoundName name : {BoundName::sphere_packing, BoundName::sphere_covering,
                         BoundName::johnson, BoundName::struik, BoundName::van_wee})
    CHECK(parse_bound_name(bound_name_str(name)) == name);
  CHECK_THROWS(parse_bound_name("no_such_bound"));
}

TEST_CASE("larger radii use the full ball sum") {
  // 2^10 / (1 + 10 + 45) = 128/7, between 18 and 19
  BoundReport sp = bound(BoundName::sphere_packing, 10, 2, Int(19));
  CHECK(sp.value == Rational(128, 7));
  CHECK(!sp.satisfied);  // 19 > 128/7
  CHECK(bound(BoundName::sphere_packing, 10, 2, Int(18)).satisfied);
  BoundReport sc = bound(BoundName::sphere_covering, 10, 2, Int(18));
  CHECK(!sc.satisfied);  // 18 < 128/7
  CHECK(bound(BoundName::sphere_covering, 10, 2, Int(19)).satisfied);
}
