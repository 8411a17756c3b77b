#include "npcc/bounds.hpp"

#include <stdexcept>

namespace npcc {

static Int ball_size(int n, int R) {
  Int s = 0;
  for (int i = 0; i <= R; ++i) s += binomial(n, i);
  return s;
}

static void check_range(int n, int R, int R_max) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (R < 0 || R > R_max)
    throw std::invalid_argument("R out of range for this bound");
}

BoundReport bound(BoundName name, int n, int R, const Int& M) {
  BoundReport rep;
  rep.name = name;
  rep.n = n;
  rep.R = R;
  const Rational space = Rational(pow2(n));

  switch (name) {
    case BoundName::sphere_packing:
    case BoundName::sphere_covering: {
      check_range(n, R, n);
      rep.value = space / Rational(ball_size(n, R));
      rep.direction = (name == BoundName::sphere_packing)
                          ? BoundDirection::upper
                          : BoundDirection::lower;
      break;
    }
    case BoundName::johnson: {
      check_range(n, R, n - 1);
      Int fl = Int(n) / (R + 1);
      Rational frac = Rational(n - R, R + 1) - Rational(Int((n - R) / (R + 1)));
      Rational denom = Rational(ball_size(n, R)) +
                       Rational(binomial(n, R)) / Rational(fl) * frac;
      rep.value = space / denom;
      rep.direction = BoundDirection::upper;
      break;
    }
    case BoundName::struik: {
      check_range(n, R, n - 1);
      Int ceil_nr = ((n - R) + R) / (R + 1);  // ceil((n-R)/(R+1))
      Int ceil_n1 = ((n + 1) + R) / (R + 1);  // ceil((n+1)/(R+1))
      Rational gap = Rational(ceil_n1) - Rational(n + 1, R + 1);
      Rational denom = Rational(ball_size(n, R)) -
                       Rational(binomial(n, R)) / Rational(ceil_nr) * gap;
      rep.value = space / denom;
      rep.direction = BoundDirection::lower;
      break;
    }
    case BoundName::van_wee: {
      if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("van_wee requires even n");
      if (R != 1) throw std::invalid_argument("van_wee requires R = 1");
      rep.value = space / Rational(n);
      rep.direction = BoundDirection::lower;
      break;
    }
  }

  rep.satisfied = (rep.direction == BoundDirection::upper)
                      ? (Rational(M) <= rep.value)
                      : (Rational(M) >= rep.value);
  return rep;
}

std::string bound_name_str(BoundName name) {
  switch (name) {
    case BoundName::sphere_packing: return "sphere_packing";
    case BoundName::sphere_covering: return "sphere_covering";
    case BoundName::johnson: return "johnson";
    case BoundName::struik: return "struik";
    case BoundName::van_wee: return "van_wee";
  }
  throw std::logic_error("unreachable");
}

BoundName parse_bound_name(const std::string& name) {
  if (name == "sphere_packing") return BoundName::sphere_packing;
  if (name == "sphere_covering") return BoundName::sphere_covering;
  if (name == "johnson") return BoundName::johnson;
  if (name == "struik") return BoundName::struik;
  if (name == "van_wee") return BoundName::van_wee;
  throw std::invalid_argument("unknown bound name: " + name);
}

}  // namespace npcc
