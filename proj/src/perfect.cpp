#include "npcc/perfect.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "npcc/np1cc.hpp"

namespace npcc {

Code hamming_code(int r) {
  if (r < 2 || r > 4)
    throw std::invalid_argument("hamming_code supports 2 <= r <= 4");
  const int n = (1 << r) - 1;
  std::vector<std::uint32_t> masks;
  masks.reserve(std::size_t{1} << (n - r));
  const std::uint32_t space = std::uint32_t{1} << n;
  for (std::uint32_t m = 0; m < space; ++m) {
    std::uint32_t syndrome = 0;
    for (int j = 1; j <= n; ++j)
      if ((m >> (j - 1)) & 1u) syndrome ^= static_cast<std::uint32_t>(j);
    if (syndrome == 0) masks.push_back(m);
  }
  Code c = Code::from_masks(n, masks);
  if (c.size() != (1ll << (n - r)))
    throw std::logic_error("hamming kernel has unexpected size");
  return c;
}

bool is_perfect(const Code& c) {
  if (c.empty()) return false;
  const int n = c.length();
  unsigned np1 = static_cast<unsigned>(n) + 1;
  if (!std::has_single_bit(np1)) return false;
  const int r = std::countr_zero(np1);
  if (c.size() != (1ll << (n - r))) return false;
  return covering_radius(c) == 1;
}

Code extend_even(const Code& c) {
  const int n = c.length();
  if (n + 1 > kMaxWordLength)
    throw std::invalid_argument("extension exceeds the maximum length 32");
  std::vector<std::uint32_t> masks;
  masks.reserve(c.words().size());
  for (const Word& w : c.words())
    masks.push_back(w.bits() |
                    (static_cast<std::uint32_t>(parity(w)) << n));
  return Code::from_masks(n + 1, masks);
}

std::string extended_kind_str(ExtendedKind k) {
  switch (k) {
    case ExtendedKind::zeroed_extended: return "zeroed_extended";
    case ExtendedKind::odd_translate: return "odd_translate";
    case ExtendedKind::even_translate: return "even_translate";
  }
  throw std::logic_error("unreachable");
}

ExtendedKind classify_extended_translate(const Code& c) {
  const int n = c.length();
  if (!std::has_single_bit(static_cast<unsigned>(n)) || n < 2)
    throw std::invalid_argument("length must be 2^r with r >= 1");
  const int r = std::countr_zero(static_cast<unsigned>(n));
  if (c.size() != (1ll << (n - r - 1)))
    throw std::invalid_argument("size does not match an extended perfect code");

  long long odd = 0, weight1 = 0, weight2 = 0;
  bool zero = false;
  for (const Word& w : c.words()) {
    int wt = weight(w);
    if (wt % 2) ++odd;
    if (wt == 0) zero = true;
    if (wt == 1) ++weight1;
    if (wt == 2) ++weight2;
  }
  if (odd == 0 && zero) return ExtendedKind::zeroed_extended;
  if (odd == c.size() && weight1 == 1) return ExtendedKind::odd_translate;
  if (odd == 0 && !zero && weight2 == (1ll << (r - 1)))
    return ExtendedKind::even_translate;
  throw std::invalid_argument(
      "weight signature matches no translate kind of an extended perfect code");
}

Code even_translate_of(const Code& extended) {
  if (classify_extended_translate(extended) != ExtendedKind::zeroed_extended)
    throw std::invalid_argument("input must classify as zeroed_extended");
  const int n = extended.length();
  std::vector<Word> twos;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) twos.push_back(Word::unit(n, i).flipped(j));
  std::sort(twos.begin(), twos.end());
  for (const Word& e : twos) {
    if (extended.contains(e)) continue;
    Code t = translate(extended, e);
    try {
      if (classify_extended_translate(t) == ExtendedKind::even_translate)
        return t;
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::runtime_error("no weight-2 even translate found");
}

Code puncture(const Code& c, int coord) {
  const int n = c.length();
  if (coord < 1 || coord > n) throw std::out_of_range("coordinate out of range");
  if (n == 1) throw std::invalid_argument("cannot puncture a length-1 code");
  std::vector<std::uint32_t> masks;
  masks.reserve(c.words().size());
  const std::uint32_t low_mask = (std::uint32_t{1} << (coord - 1)) - 1;
  for (const Word& w : c.words()) {
    std::uint32_t m = w.bits();
    masks.push_back((m & low_mask) | ((m >> coord) << (coord - 1)));
  }
  Code out = Code::from_masks(n - 1, masks);
  if (out.size() != c.size())
    throw std::runtime_error("puncturing coordinate " + std::to_string(coord) +
                             " collides two codewords");
  return out;
}

LambdaTable zero_lambda(const Code& base) {
  LambdaTable t;
  for (const Word& w : base.words()) t[w] = 0;
  return t;
}

LambdaTable parse_lambda(std::istream& in, int base_length) {
  LambdaTable t;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream row(line);
    std::string word_text, value_text;
    if (!(row >> word_text)) continue;  // blank line
    if (word_text[0] == '#') continue;
    if (!(row >> value_text) || (value_text != "0" && value_text != "1"))
      throw std::invalid_argument("lambda line " + std::to_string(line_no) +
                                  ": expected '<word> <0|1>'");
    std::string extra;
    if (row >> extra)
      throw std::invalid_argument("lambda line " + std::to_string(line_no) +
                                  ": trailing tokens");
    Word w = Word::parse(word_text);
    if (w.length() != base_length)
      throw std::invalid_argument("lambda line " + std::to_string(line_no) +
                                  ": word length differs from base length");
    if (t.count(w))
      throw std::invalid_argument("lambda line " + std::to_string(line_no) +
                                  ": duplicate entry for " + word_text);
    t[w] = value_text == "1" ? 1 : 0;
  }
  return t;
}

LambdaTable load_lambda(const std::string& path, int base_length) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_lambda(in, base_length);
}

std::string serialize_lambda(const LambdaTable& table) {
  std::ostringstream out;
  for (const auto& [w, v] : table) out << w.str() << ' ' << v << '\n';
  return out.str();
}

Code vasiliev(const Code& base, const LambdaTable& lambda) {
  if (!is_perfect(base))
    throw std::invalid_argument("vasiliev base must be a perfect code");
  const int m = base.length();
  if (2 * m + 1 > kMaxWordLength)
    throw std::invalid_argument("vasiliev result exceeds the maximum length 32");
  for (const Word& w : base.words())
    if (!lambda.count(w))
      throw std::invalid_argument("lambda table missing base codeword " +
                                  w.str());

  std::vector<std::uint32_t> masks;
  masks.reserve((std::size_t{1} << m) * base.words().size());
  const std::uint32_t xs = std::uint32_t{1} << m;
  for (std::uint32_t x = 0; x < xs; ++x) {
    const std::uint32_t px = static_cast<std::uint32_t>(std::popcount(x) & 1);
    for (const Word& cw : base.words()) {
      const std::uint32_t lam = static_cast<std::uint32_t>(lambda.at(cw));
      masks.push_back(x | ((x ^ cw.bits()) << m) | ((px ^ lam) << (2 * m)));
    }
  }
  Code out = Code::from_masks(2 * m + 1, masks);
  if (out.size() != static_cast<long long>(masks.size()))
    throw std::logic_error("vasiliev construction produced duplicates");
  return out;
}

long long intersection_size(const Code& a, const Code& b) {
  if (a.length() != b.length())
    throw std::invalid_argument("code lengths differ");
  long long count = 0;
  auto ia = a.words().begin();
  auto ib = b.words().begin();
  while (ia != a.words().end() && ib != b.words().end()) {
    if (*ia == *ib) {
      ++count;
      ++ia;
      ++ib;
    } else if (*ia < *ib) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return count;
}

}  // namespace npcc
