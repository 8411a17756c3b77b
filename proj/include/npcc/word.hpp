#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace npcc {

inline constexpr int kMaxWordLength = 32;

// Binary word of fixed length 1..32. Bit i (0-based) of the packed mask
// holds coordinate i+1; coordinate 1 is the leftmost character of the
// textual form. Ordering and serialization use the textual value
// (coordinate 1 as most significant bit), so sorted output reads like a
// sorted column of bitstrings.
class Word {
 public:
  Word() = default;
  Word(int length, std::uint32_t bits);

  static Word zero(int length) { return Word(length, 0); }
  static Word unit(int length, int coord);  // weight-1 word, 1-based coord
  static Word parse(std::string_view text);

  int length() const { return length_; }
  std::uint32_t bits() const { return bits_; }
  bool bit(int coord) const;        // 1-based
  Word flipped(int coord) const;    // 1-based
  Word complemented() const;

  // Textual value: coordinate 1 contributes 2^(n-1).
  std::uint32_t canonical_key() const;
  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.length_ == b.length_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b) {
    if (a.length_ != b.length_) return a.length_ < b.length_;
    return a.canonical_key() < b.canonical_key();
  }
  friend Word operator^(const Word& a, const Word& b);

 private:
  int length_ = 0;
  std::uint32_t bits_ = 0;
};

int weight(const Word& w);
int parity(const Word& w);  // weight mod 2
int distance(const Word& x, const Word& y);

// All words within / at exactly Hamming distance t of x, sorted.
std::vector<Word> ball(const Word& x, int t);
std::vector<Word> sphere(const Word& x, int t);

// Calls fn(mask) for every n-bit mask of popcount w, ascending mask order.
template <typename Fn>
void for_each_mask_of_weight(int n, int w, Fn&& fn) {
  if (w == 0) {
    fn(std::uint32_t{0});
    return;
  }
  if (w > n) return;
  std::uint64_t m = (std::uint64_t{1} << w) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (m < limit) {
    fn(static_cast<std::uint32_t>(m));
    std::uint64_t c = m & ~(m - 1);
    std::uint64_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;  // Gosper: next mask of equal weight
  }
}

}  // namespace npcc
