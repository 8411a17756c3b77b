#pragma once

#include <string>

#include "npcc/rational.hpp"

namespace npcc {

// Classical size bounds for binary codes of length n and covering radius
// (or packing radius) R. Each bound is reported as the exact rational
// threshold on M together with its direction:
//   sphere_packing : M <= 2^n / sum_{i<=R} C(n,i)
//   sphere_covering: M >= 2^n / sum_{i<=R} C(n,i)
//   johnson        : packing denominator enlarged by
//                    C(n,R)/floor(n/(R+1)) * frac((n-R)/(R+1))   (upper)
//   struik         : covering denominator reduced by
//                    C(n,R)/ceil((n-R)/(R+1)) * (ceil((n+1)/(R+1)) - (n+1)/(R+1))
//                                                                 (lower)
//   van_wee        : M >= 2^n / n, defined for even n with R = 1
enum class BoundName { sphere_packing, sphere_covering, johnson, struik, van_wee };

enum class BoundDirection { upper, lower };  // upper: M <= value; lower: M >= value

struct BoundReport {
  BoundName name;
  int n = 0;
  int R = 0;
  Rational value;
  BoundDirection direction = BoundDirection::upper;
  bool satisfied = false;  // for the M passed to bound()
};

BoundReport bound(BoundName name, int n, int R, const Int& M);

std::string bound_name_str(BoundName name);
BoundName parse_bound_name(const std::string& name);

}  // namespace npcc
