#pragma once

#include <map>
#include <string>
#include <vector>

#include "npcc/code.hpp"
#include "npcc/np1cc.hpp"

namespace npcc {

// Structural cross-checks beyond the base verification. Returns a list of
// human-readable violations; empty means the code passes every check:
//   - every word covered once or twice, exactly M words covered twice,
//   - each non-codeword's radius-1 ball holds exactly one unit of
//     over-covering,
//   - codewords see exactly 2 codewords in their radius-2 ball,
//     non-codewords exactly n/2 + 1,
//   - capsules (paired radius-1 balls) tile the whole space,
//   - for n > 2: half the codewords have even weight, the distance-1 pair
//     count is even, and exactly half of the distance-2 pairs are even-weight,
//   - the transformed distance distribution is supported on {0, n/2, n/2+1},
//     agrees along the pairwise-distance and character-sum routes, and has
//     the nonzero-count forced by the code's type,
//   - every translate signature (A0, A1) lies in the four-row table and the
//     translated weight distribution matches the two-coefficient closed form.
std::vector<std::string> audit(const Code& c);

// Exhaustive list of all covering-radius-1 codes with the pair structure,
// as labeled subsets, in a deterministic order. Supported lengths: 2 and 4.
std::vector<Code> enumerate_np1cc(int n);

struct CensusEntry {
  Code code;
  CodeType type;
  long long k = 0;  // distance-1 pair count
};

struct CensusResult {
  int n = 0;
  long long total = 0;
  long long type_a = 0;
  long long type_b = 0;
  long long type_c = 0;
  std::map<long long, long long> k_histogram;
  std::vector<CensusEntry> entries;
  std::vector<std::string> violations;
};

// Enumerates, classifies, and audits every code of the given length.
// Work is partitioned by the smallest codeword mask and merged in mask
// order, so the result is identical for any thread count.
CensusResult run_census(int n, int threads);

// Canonical JSON rendering (used verbatim by the CLI), stable across runs.
std::string census_json(const CensusResult& r);

}  // namespace npcc
