#pragma once

#include <string>
#include <vector>

#include "npcc/code.hpp"

namespace npcc {

// Appends an even-parity coordinate to a verified NP1CC. In the extension
// every codeword has even weight and exactly one partner at distance 2;
// all other codewords are at distance >= 4.
Code extend_np1cc(const Code& c);

// Per-coordinate behaviour of the partner pairs of an extended code:
// tag A when the partners disagree on the coordinate in every pair, B
// when they agree in every pair, C otherwise. Puncturing a coordinate
// yields an NP1CC of exactly the tagged type.
enum class CoordTag { A, B, C };
char coord_tag_char(CoordTag t);

struct PunctureProfile {
  int extended_length = 0;
  std::vector<CoordTag> tags;  // one per coordinate, in coordinate order
  int count(CoordTag t) const;
};

// Scans an extended NP1CC: validates the even-weight/partner structure,
// tags every coordinate, and re-verifies each punctured code against its
// tag. The n+1 punctured codes form one equivalence class keyed by the
// scanned code's serialization.
PunctureProfile puncture_scan(const Code& extended);

// Length-16 fixture whose extension carries all three tags: the union of
// an extended doubling-construction code with an odd translate of the
// extension of a second doubling code that differs from the first in 128
// codewords, all on the inner parity coordinate.
Code build_abc_fixture();

// Canonical serialization of extend_np1cc(c): equal keys iff the
// extensions are the identical codeword set.
std::string equivalence_key(const Code& c);

}  // namespace npcc
