#include "npcc/word.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace npcc {

Word::Word(int length, std::uint32_t bits) : length_(length), bits_(bits) {
  if (length < 1 || length > kMaxWordLength)
    throw std::invalid_argument("word length must be in [1, 32], got " +
                                std::to_string(length));
  if (length < kMaxWordLength && (bits >> length) != 0)
    throw std::invalid_argument("mask has bits above the word length");
}

Word Word::unit(int length, int coord) {
  Word w = Word::zero(length);
  return w.flipped(coord);
}

Word Word::parse(std::string_view text) {
  if (text.empty() || text.size() > kMaxWordLength)
    throw std::invalid_argument("word text must have 1..32 characters");
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '1')
      bits |= std::uint32_t{1} << i;
    else if (ch != '0')
      throw std::invalid_argument(std::string("invalid character '") + ch +
                                  "' in word text");
  }
  return Word(static_cast<int>(text.size()), bits);
}

bool Word::bit(int coord) const {
  if (coord < 1 || coord > length_)
    throw std::out_of_range("coordinate out of range");
  return (bits_ >> (coord - 1)) & 1u;
}

Word Word::flipped(int coord) const {
  if (coord < 1 || coord > length_)
    throw std::out_of_range("coordinate out of range");
  return Word(length_, bits_ ^ (std::uint32_t{1} << (coord - 1)));
}

Word Word::complemented() const {
  std::uint32_t all = (length_ == kMaxWordLength)
                          ? ~std::uint32_t{0}
                          : (std::uint32_t{1} << length_) - 1;
  return Word(length_, bits_ ^ all);
}

std::uint32_t Word::canonical_key() const {
  std::uint32_t key = 0;
  for (int i = 0; i < length_; ++i) key = (key << 1) | ((bits_ >> i) & 1u);
  return key;
}

std::string Word::str() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i)
    if ((bits_ >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

Word operator^(const Word& a, const Word& b) {
  if (a.length_ != b.length_)
    throw std::invalid_argument("word lengths differ: " +
                                std::to_string(a.length_) + " vs " +
                                std::to_string(b.length_));
  return Word(a.length_, a.bits_ ^ b.bits_);
}

int weight(const Word& w) { return std::popcount(w.bits()); }

int parity(const Word& w) { return weight(w) & 1; }

int distance(const Word& x, const Word& y) {
  if (x.length() != y.length())
    throw std::invalid_argument("word lengths differ");
  return std::popcount(x.bits() ^ y.bits());
}

static std::vector<Word> around(const Word& x, int t, bool exact) {
  if (t < 0 || t > x.length())
    throw std::invalid_argument("radius out of range [0, n]");
  std::vector<Word> out;
  int lo = exact ? t : 0;
  for (int w = lo; w <= t; ++w)
    for_each_mask_of_weight(x.length(), w, [&](std::uint32_t flips) {
      out.emplace_back(x.length(), x.bits() ^ flips);
    });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> ball(const Word& x, int t) { return around(x, t, false); }

std::vector<Word> sphere(const Word& x, int t) { return around(x, t, true); }

}  // namespace npcc
