#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "npcc/code.hpp"

namespace npcc {

// Cyclic binary sequence of length up to 64; position i (0-based) is the
// i-th character of the textual form. Spaces in the text are ignored, so
// halves may be written "00011011 11100100".
struct BitSequence {
  int length = 0;
  std::uint64_t bits = 0;

  static BitSequence parse(std::string_view text);
  int bit(int i) const;  // 0-based, not cyclic
  std::string str() const;

  friend bool operator==(const BitSequence& a, const BitSequence& b) {
    return a.length == b.length && a.bits == b.bits;
  }
};

// Self-dual: complementing and rotating by half the period gives the
// sequence back, i.e. s[i + L/2] = 1 - s[i] for all i. Such a sequence is
// determined by its first half X as [X X~].
bool is_self_dual(const BitSequence& s);

// Pair of self-dual sequences of equal length whose halves X, X' start
// with 0 and differ exactly in their last symbol. Consequently the two
// sequences differ in exactly two positions, half a period apart.
struct SelfDualPair {
  BitSequence first, second;
  int window() const { return first.length / 2; }
};

SelfDualPair make_self_dual_pair(const BitSequence& a, const BitSequence& b);

// The four base pairs of length 16.
std::array<SelfDualPair, 4> base_pairs();

// All L cyclic windows of width w in start-position order (1 <= w <= L).
std::vector<Word> windows(const BitSequence& s, int w);

// Doubling step: from a pair with halves X, X' of length m and an
// even-weight word v of length m starting with 0, produces the pair
//   [V  X+V  V~  X+V~] , [V  X'+V  V~  X'+V~]
// of length 4m (window 2m).
SelfDualPair recursion_step(const SelfDualPair& p, const Word& v);

// Balanced Type A code of length 2^r, r in {3, 4}: all width-2^(r-1)
// windows of the first base pair, doubled once for r = 4 over all 2^(m-2)
// admissible v-words. The result is a (generally non-zeroed) translate
// with the same number of type I pairs disagreeing on every coordinate.
Code build_balanced(int r);

// Translate by the canonically smallest codeword (identity on zeroed codes).
Code zero_translate(const Code& c);

// Per-coordinate counts of type I pairs whose members disagree there.
// Requires a Type A code.
std::vector<long long> type_i_coordinate_counts(const Code& c);

// True iff c is Type A and every coordinate carries exactly
// 2^(n - 2r - 1) type I disagreements (n = 2^r).
bool is_balanced(const Code& c);

}  // namespace npcc
