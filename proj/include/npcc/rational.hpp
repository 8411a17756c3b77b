#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace npcc {

// Bound and spectrum arithmetic is exact: no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int binomial(int n, int k);
Int pow2(int e);

bool is_integer(const Rational& q);
// Exact integer value of q; throws if q has a nontrivial denominator.
Int to_integer(const Rational& q);

}  // namespace npcc
