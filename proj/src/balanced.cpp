#include "npcc/balanced.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "npcc/np1cc.hpp"

namespace npcc {

BitSequence BitSequence::parse(std::string_view text) {
  BitSequence s;
  for (char ch : text) {
    if (ch == ' ') continue;
    if (s.length >= 64) throw std::invalid_argument("sequence longer than 64");
    if (ch == '1')
      s.bits |= std::uint64_t{1} << s.length;
    else if (ch != '0')
      throw std::invalid_argument(std::string("invalid character '") + ch +
                                  "' in sequence");
    ++s.length;
  }
  if (s.length == 0) throw std::invalid_argument("empty sequence");
  return s;
}

int BitSequence::bit(int i) const {
  if (i < 0 || i >= length) throw std::out_of_range("sequence index");
  return static_cast<int>((bits >> i) & 1u);
}

std::string BitSequence::str() const {
  std::string out(static_cast<std::size_t>(length), '0');
  for (int i = 0; i < length; ++i)
    if ((bits >> i) & 1u) out[static_cast<std::size_t>(i)] = '1';
  return out;
}

bool is_self_dual(const BitSequence& s) {
  if (s.length % 2 != 0)
    throw std::invalid_argument("self-duality needs an even length");
  const int half = s.length / 2;
  for (int i = 0; i < half; ++i)
    if (s.bit(i + half) == s.bit(i)) return false;
  return true;
}

SelfDualPair make_self_dual_pair(const BitSequence& a, const BitSequence& b) {
  if (a.length != b.length)
    throw std::invalid_argument("pair members differ in length");
  if (!is_self_dual(a) || !is_self_dual(b))
    throw std::invalid_argument("pair members must be self-dual");
  const int half = a.length / 2;
  if (a.bit(0) != 0 || b.bit(0) != 0)
    throw std::invalid_argument("half-sequences must start with 0");
  for (int i = 0; i < half - 1; ++i)
    if (a.bit(i) != b.bit(i))
      throw std::invalid_argument("halves may differ only in the last symbol");
  if (a.bit(half - 1) == b.bit(half - 1))
    throw std::invalid_argument("halves must differ in the last symbol");
  return SelfDualPair{a, b};
}

std::array<SelfDualPair, 4> base_pairs() {
  auto mk = [](std::string_view x, std::string_view y) {
    return make_self_dual_pair(BitSequence::parse(x), BitSequence::parse(y));
  };
  return {
      mk("00011011 11100100", "00011010 11100101"),
      mk("01001111 10110000", "01001110 10110001"),
      mk("01110111 10001000", "01110110 10001001"),
      mk("00100010 11011101", "00100011 11011100"),
  };
}

std::vector<Word> windows(const BitSequence& s, int w) {
  if (w < 1 || w > s.length)
    throw std::invalid_argument("window width out of range [1, L]");
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(s.length));
  for (int p = 0; p < s.length; ++p) {
    std::uint32_t bits = 0;
    for (int q = 0; q < w; ++q)
      bits |= static_cast<std::uint32_t>(s.bit((p + q) % s.length)) << q;
    out.emplace_back(w, bits);
  }
  return out;
}

SelfDualPair recursion_step(const SelfDualPair& p, const Word& v) {
  const int m = p.window();
  if (4 * m > 64) throw std::invalid_argument("doubled sequence exceeds 64");
  if (v.length() != m)
    throw std::invalid_argument("v must have the current window length " +
                                std::to_string(m));
  if (weight(v) % 2 != 0) throw std::invalid_argument("v must have even weight");
  if (v.bit(1)) throw std::invalid_argument("v must start with 0");

  const std::uint64_t half_mask = (std::uint64_t{1} << m) - 1;
  const std::uint64_t vb = v.bits();
  const std::uint64_t vc = vb ^ half_mask;  // complement of v
  auto build = [&](const BitSequence& s) {
    const std::uint64_t x = s.bits & half_mask;  // first half of s
    BitSequence out;
    out.length = 4 * m;
    out.bits = vb | ((x ^ vb) << m) | (vc << (2 * m)) | ((x ^ vc) << (3 * m));
    return out;
  };
  return make_self_dual_pair(build(p.first), build(p.second));
}

Code build_balanced(int r) {
  if (r != 3 && r != 4)
    throw std::invalid_argument("build_balanced supports r in {3, 4}");
  const SelfDualPair base = base_pairs()[0];
  std::vector<Word> ws;
  if (r == 3) {
    for (const BitSequence* s : {&base.first, &base.second})
      for (const Word& w : windows(*s, 8)) ws.push_back(w);
  } else {
    // All even-weight leading-0 words of the current window length, in
    // canonical order.
    std::vector<Word> vs;
    for (std::uint32_t m = 0; m < 256; m += 2)  // bit 0 = coordinate 1 = 0
      if (std::popcount(m) % 2 == 0) vs.emplace_back(8, m);
    std::sort(vs.begin(), vs.end());
    for (const Word& v : vs) {
      SelfDualPair doubled = recursion_step(base, v);
      for (const BitSequence* s : {&doubled.first, &doubled.second})
        for (const Word& w : windows(*s, 16)) ws.push_back(w);
    }
  }
  const int n = 1 << r;
  Code c(n, std::move(ws));
  if (c.size() != (1ll << (n - r)))
    throw std::logic_error("window words are not all distinct");
  return c;
}

Code zero_translate(const Code& c) {
  if (c.empty()) throw std::invalid_argument("empty code");
  return translate(c, c.words().front());
}

std::vector<long long> type_i_coordinate_counts(const Code& c) {
  Np1ccReport rep = verify_np1cc(c);
  if (!rep.is_np1cc)
    throw std::invalid_argument("not an NP1CC: " + rep.failures.front());
  if (rep.type != CodeType::A)
    throw std::invalid_argument("per-coordinate counts need a Type A code");
  std::vector<long long> counts(static_cast<std::size_t>(c.length()), 0);
  for (const PartnerPair& p : rep.pairs.pairs) {
    std::uint32_t diff = p.a.bits() ^ p.b.bits();
    ++counts[static_cast<std::size_t>(std::countr_zero(diff))];
  }
  return counts;
}

bool is_balanced(const Code& c) {
  std::vector<long long> counts = type_i_coordinate_counts(c);
  const int n = c.length();
  const int r = std::countr_zero(static_cast<unsigned>(n));
  const int e = n - 2 * r - 1;
  if (e < 0) return false;  // target count 2^e is not an integer
  const long long target = 1ll << e;
  return std::all_of(counts.begin(), counts.end(),
                     [&](long long v) { return v == target; });
}

}  // namespace npcc
