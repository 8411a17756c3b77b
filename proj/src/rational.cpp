#include "npcc/rational.hpp"

#include <stdexcept>

namespace npcc {

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return r;
}

Int pow2(int e) {
  if (e < 0) throw std::invalid_argument("negative power of two");
  Int r = 1;
  return r << e;
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

Int to_integer(const Rational& q) {
  if (!is_integer(q)) throw std::runtime_error("expected an integer value");
  return numerator(q);
}

}  // namespace npcc
