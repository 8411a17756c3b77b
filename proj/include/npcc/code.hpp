#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "npcc/word.hpp"

namespace npcc {

// Duplicate-free set of equal-length words, kept sorted in canonical
// (textual-value ascending) order.
//
// File format: optional header line "# n=<int>", then one codeword per
// line as an n-character {0,1} string with coordinate 1 leftmost. Blank
// lines and other "#" comments are ignored; duplicate codeword lines are
// rejected.
class Code {
 public:
  Code() = default;
  Code(int length, std::vector<Word> words);

  static Code from_masks(int length, const std::vector<std::uint32_t>& masks);
  static Code from_strings(const std::vector<std::string>& rows);
  static Code parse(std::istream& in);
  static Code parse_text(const std::string& text);
  static Code load(const std::string& path);

  void write(std::ostream& out) const;
  std::string serialize() const;
  void save(const std::string& path) const;  // via temp file + rename

  int length() const { return length_; }
  long long size() const { return static_cast<long long>(words_.size()); }
  bool empty() const { return words_.empty(); }
  const std::vector<Word>& words() const { return words_; }
  const Word& word(std::size_t i) const { return words_[i]; }
  bool contains(const Word& w) const;

  friend bool operator==(const Code& a, const Code& b) {
    return a.length_ == b.length_ && a.words_ == b.words_;
  }
  friend bool operator!=(const Code& a, const Code& b) { return !(a == b); }

 private:
  int length_ = 0;
  std::vector<Word> words_;
};

Code translate(const Code& c, const Word& e);
Code code_union(const Code& a, const Code& b);

}  // namespace npcc
