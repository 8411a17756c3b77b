#pragma once

#include <string>
#include <vector>

#include "npcc/code.hpp"

namespace npcc {

// A nearly perfect 1-covering code (NP1CC) has length n = 2^r, exactly
// 2^(n-r) codewords, and covering radius 1. Every codeword then has
// exactly one other codeword within distance 2 (its partner); a pair is
// type I when the partners are at distance 1 and type II at distance 2.
// A code is Type A when all pairs are type I, Type B when all are
// type II, and Type C otherwise.

// Exhaustive covering radius by repeated one-bit frontier expansion over
// a 2^n bitmap. Requires 1 <= n <= 16 and a nonempty code.
int covering_radius(const Code& c);

enum class PairKind { type_i, type_ii };

struct PartnerPair {
  Word a, b;  // canonical order: a < b
  PairKind kind = PairKind::type_i;
};

struct PairPartition {
  std::vector<PartnerPair> pairs;  // sorted by first member
  long long type_i_count() const;
};

enum class CodeType { A, B, C, not_applicable };
std::string code_type_str(CodeType t);

struct Np1ccReport {
  bool is_np1cc = false;
  int n = 0;
  long long M = 0;
  int r = 0;  // log2(n) when n is a power of two, else 0
  CodeType type = CodeType::not_applicable;
  long long k = 0;  // number of type I pairs
  PairPartition pairs;
  std::vector<Word> midwords;  // non-codewords covered by two codewords
  std::vector<std::string> failures;  // empty iff is_np1cc
};

// Checks n = 2^r, |c| = 2^(n-r), covering radius <= 1 and the partner
// structure; never throws on a structurally bad code (failures are
// reported). Lengths above 16 are reported as unverifiable.
Np1ccReport verify_np1cc(const Code& c);

// Sum over y in ys of (|B1(y) ∩ c| - 1). Requires every y covered.
long long over_covering(const Code& c, const std::vector<Word>& ys);

// Non-codewords covered by exactly two codewords. Requires an NP1CC.
std::vector<Word> midwords(const Code& c);

// The unique other codeword within distance 2 of cw. Throws if cw is not
// a codeword or if the count of candidates is not exactly one.
Word partner(const Code& c, const Word& cw);

// Partition of all codewords into partner pairs; throws when any
// codeword has more or fewer than one partner.
PairPartition pair_partition(const Code& c);

struct Capsule {
  PartnerPair pair;
  std::vector<Word> cells;  // B1(a) ∪ B1(b), sorted
};

// One capsule per pair; verifies the capsules are pairwise disjoint and
// cover the whole space (they tile F2^n for an NP1CC, 2n cells each).
std::vector<Capsule> capsules(const Code& c);

struct Radius2Census {
  long long codeword_min = 0, codeword_max = 0;        // |B2(c) ∩ C|
  long long noncodeword_min = 0, noncodeword_max = 0;  // |B2(x) ∩ C|
  // For an NP1CC: codeword counts are exactly 2 (self + partner) and
  // non-codeword counts are exactly n/2 + 1.
  bool conforms(int n) const;
};

Radius2Census radius2_census(const Code& c);

}  // namespace npcc
