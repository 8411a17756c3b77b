#pragma once

#include "npcc/code.hpp"

namespace npcc {

// Builders for nearly perfect 1-covering codes of length 2^r.

// { (c,0) : c in c1 } ∪ { (c,1) : c in c2 } with the new coordinate
// appended last. Both inputs must be perfect codes of the same length
// 2^r - 1 (verified eagerly). The result is Type A when c1 = c2, Type B
// when they are disjoint, and Type C otherwise with k = |c1 ∩ c2| pairs
// of type I.
Code glue(const Code& c1, const Code& c2);

// Union of an extended zeroed perfect code (or an even translate of one)
// with an odd translate of an extended zeroed perfect code of the same
// length; yields a Type A code, zeroed iff `ext` is zeroed.
Code type_a_union(const Code& ext, const Code& odd_t);

// Kernel of an r x 2^r parity-check matrix. Variant A uses all 2^r
// columns including zero (the zero column makes every codeword pair with
// a distance-1 partner); variant B replaces the zero column with a second
// copy of column 1, pairing partners at distance 2.
enum class LinearVariant { A, B };
Code linear_np1cc(int r, LinearVariant variant);

}  // namespace npcc
