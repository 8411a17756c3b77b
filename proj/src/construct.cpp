#include "npcc/construct.hpp"

#include <bit>
#include <stdexcept>

#include "npcc/perfect.hpp"

namespace npcc {

Code glue(const Code& c1, const Code& c2) {
  if (c1.length() != c2.length())
    throw std::invalid_argument("glue inputs must have equal length");
  const int n = c1.length();
  if (!std::has_single_bit(static_cast<unsigned>(n) + 1))
    throw std::invalid_argument("glue inputs must have length 2^r - 1");
  if (!is_perfect(c1)) throw std::invalid_argument("first glue input is not perfect");
  if (!is_perfect(c2)) throw std::invalid_argument("second glue input is not perfect");

  std::vector<std::uint32_t> masks;
  masks.reserve(c1.words().size() + c2.words().size());
  for (const Word& w : c1.words()) masks.push_back(w.bits());
  const std::uint32_t tag = std::uint32_t{1} << n;
  for (const Word& w : c2.words()) masks.push_back(w.bits() | tag);
  return Code::from_masks(n + 1, masks);
}

Code type_a_union(const Code& ext, const Code& odd_t) {
  if (ext.length() != odd_t.length())
    throw std::invalid_argument("union inputs must have equal length");
  ExtendedKind k1 = classify_extended_translate(ext);
  if (k1 == ExtendedKind::odd_translate)
    throw std::invalid_argument("first input must be an even-weight translate");
  if (classify_extended_translate(odd_t) != ExtendedKind::odd_translate)
    throw std::invalid_argument("second input must be an odd translate");
  Code out = code_union(ext, odd_t);
  if (out.size() != ext.size() + odd_t.size())
    throw std::logic_error("even and odd halves overlap");
  return out;
}

Code linear_np1cc(int r, LinearVariant variant) {
  if (r < 1 || r > 4)
    throw std::invalid_argument("linear_np1cc supports 1 <= r <= 4");
  const int n = 1 << r;
  // Column of coordinate j: j-1, except variant B maps coordinate 1 to
  // column 1 (duplicating coordinate 2's column).
  std::vector<std::uint32_t> cols(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j)
    cols[static_cast<std::size_t>(j - 1)] = static_cast<std::uint32_t>(j - 1);
  if (variant == LinearVariant::B) cols[0] = 1;

  std::vector<std::uint32_t> masks;
  const std::uint32_t space = std::uint32_t{1} << n;
  for (std::uint32_t m = 0; m < space; ++m) {
    std::uint32_t syndrome = 0;
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1u) syndrome ^= cols[static_cast<std::size_t>(i)];
    if (syndrome == 0) masks.push_back(m);
  }
  Code c = Code::from_masks(n, masks);
  if (c.size() != (1ll << (n - r)))
    throw std::logic_error("parity-check kernel has unexpected size");
  return c;
}

}  // namespace npcc
