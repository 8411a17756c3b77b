#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "npcc/code.hpp"

namespace npcc {

// Hamming code of length 2^r - 1: kernel of the parity-check matrix whose
// columns are all nonzero r-bit vectors in ascending numeric order, i.e.
// column j is the binary representation of j. Supported for 2 <= r <= 4.
Code hamming_code(int r);

// True iff n = 2^r - 1, |c| = 2^(n-r), and the exhaustive covering radius
// equals 1. Returns false on malformed sizes without scanning.
bool is_perfect(const Code& c);

// Appends an even-parity coordinate as the new last coordinate.
Code extend_even(const Code& c);

// Translates of an extended zeroed perfect code of length 2^r fall into
// three kinds by weight signature:
//   zeroed_extended : all weights even, contains the zero word
//   odd_translate   : all weights odd, exactly one word of weight 1
//   even_translate  : all weights even, no zero word, 2^(r-1) words of
//                     weight 2
enum class ExtendedKind { zeroed_extended, odd_translate, even_translate };
std::string extended_kind_str(ExtendedKind k);

ExtendedKind classify_extended_translate(const Code& c);

// Smallest weight-2 translate of an extended zeroed perfect code that
// classifies as even_translate.
Code even_translate_of(const Code& extended);

// Deletes 1-based coordinate `coord`; throws if two codewords collide.
Code puncture(const Code& c, int coord);

// Value table for the Vasil'ev parity twist: one bit per base codeword.
using LambdaTable = std::map<Word, int>;

LambdaTable zero_lambda(const Code& base);
LambdaTable parse_lambda(std::istream& in, int base_length);
LambdaTable load_lambda(const std::string& path, int base_length);
std::string serialize_lambda(const LambdaTable& table);

// Doubling construction: from a perfect base code of length m builds the
// length 2m+1 perfect code { (x, x + c, parity(x) + lambda(c)) } over all
// x in F2^m and base codewords c. The result contains the zero word iff
// lambda(0) = 0 (for a zeroed base).
Code vasiliev(const Code& base, const LambdaTable& lambda);

long long intersection_size(const Code& a, const Code& b);

}  // namespace npcc
