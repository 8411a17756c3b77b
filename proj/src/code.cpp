#include "npcc/code.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace npcc {

Code::Code(int length, std::vector<Word> words)
    : length_(length), words_(std::move(words)) {
  if (length < 1 || length > kMaxWordLength)
    throw std::invalid_argument("code length must be in [1, 32]");
  for (const Word& w : words_)
    if (w.length() != length)
      throw std::invalid_argument("codeword length " +
                                  std::to_string(w.length()) +
                                  " does not match code length " +
                                  std::to_string(length));
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

Code Code::from_masks(int length, const std::vector<std::uint32_t>& masks) {
  std::vector<Word> ws;
  ws.reserve(masks.size());
  for (std::uint32_t m : masks) ws.emplace_back(length, m);
  return Code(length, std::move(ws));
}

Code Code::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) throw std::invalid_argument("no codewords given");
  std::vector<Word> ws;
  ws.reserve(rows.size());
  for (const std::string& row : rows) ws.push_back(Word::parse(row));
  const int n = ws.front().length();  // read before the move below
  return Code(n, std::move(ws));
}

static bool parse_header(const std::string& line, int& n_out) {
  // Accepts "# n=<int>" with optional spaces around tokens.
  std::size_t i = 1;
  auto skip_ws = [&] {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  };
  skip_ws();
  if (i >= line.size() || line[i] != 'n') return false;
  ++i;
  skip_ws();
  if (i >= line.size() || line[i] != '=') return false;
  ++i;
  skip_ws();
  std::size_t start = i;
  while (i < line.size() && line[i] >= '0' && line[i] <= '9') ++i;
  if (start == i) return false;
  std::size_t tail = i;
  while (tail < line.size()) {
    if (line[tail] != ' ' && line[tail] != '\t') return false;
    ++tail;
  }
  n_out = std::stoi(line.substr(start, i - start));
  return true;
}

Code Code::parse(std::istream& in) {
  std::vector<Word> ws;
  int declared_n = -1;
  int seen_n = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t a = line.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t");
    std::string body = line.substr(a, b - a + 1);
    if (body[0] == '#') {
      int n = 0;
      if (declared_n < 0 && parse_header(body, n)) declared_n = n;
      continue;
    }
    Word w = Word::parse(body);
    if (seen_n < 0)
      seen_n = w.length();
    else if (w.length() != seen_n)
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": codeword length differs from previous lines");
    for (const Word& prev : ws)
      if (prev == w)
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": duplicate codeword " + body);
    ws.push_back(w);
  }
  if (seen_n < 0) {
    if (declared_n < 0)
      throw std::invalid_argument("no codewords and no header in input");
    return Code(declared_n, {});
  }
  if (declared_n >= 0 && declared_n != seen_n)
    throw std::invalid_argument("header declares n=" +
                                std::to_string(declared_n) +
                                " but codewords have length " +
                                std::to_string(seen_n));
  return Code(seen_n, std::move(ws));
}

Code Code::parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

Code Code::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse(in);
}

void Code::write(std::ostream& out) const {
  out << "# n=" << length_ << '\n';
  for (const Word& w : words_) out << w.str() << '\n';
}

std::string Code::serialize() const {
  std::ostringstream out;
  write(out);
  return out.str();
}

void Code::save(const std::string& path) const {
  std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    write(out);
  }
  std::filesystem::rename(tmp, target);
}

bool Code::contains(const Word& w) const {
  if (w.length() != length_) return false;
  auto it = std::lower_bound(words_.begin(), words_.end(), w);
  return it != words_.end() && *it == w;
}

Code translate(const Code& c, const Word& e) {
  if (e.length() != c.length())
    throw std::invalid_argument("translate vector length differs from code length");
  std::vector<Word> ws;
  ws.reserve(c.words().size());
  for (const Word& w : c.words()) ws.push_back(w ^ e);
  return Code(c.length(), std::move(ws));
}

Code code_union(const Code& a, const Code& b) {
  if (a.length() != b.length())
    throw std::invalid_argument("code lengths differ in union");
  std::vector<Word> ws = a.words();
  ws.insert(ws.end(), b.words().begin(), b.words().end());
  return Code(a.length(), std::move(ws));
}

}  // namespace npcc
