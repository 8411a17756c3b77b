#include "npcc/np1cc.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace npcc {

namespace {

constexpr int kExhaustiveCap = 16;

void require_exhaustive(const Code& c) {
  if (c.empty()) throw std::invalid_argument("empty code");
  if (c.length() > kExhaustiveCap)
    throw std::invalid_argument("exhaustive scan capped at length 16, got " +
                                std::to_string(c.length()));
}

// coverage[x] = |B1(x) ∩ c|; indexed by raw mask.
std::vector<std::uint8_t> coverage_counts(const Code& c) {
  const int n = c.length();
  std::vector<std::uint8_t> cov(std::size_t{1} << n, 0);
  for (const Word& w : c.words()) {
    std::uint32_t m = w.bits();
    ++cov[m];
    for (int i = 0; i < n; ++i) ++cov[m ^ (std::uint32_t{1} << i)];
  }
  return cov;
}

std::vector<std::uint8_t> membership(const Code& c) {
  std::vector<std::uint8_t> in(std::size_t{1} << c.length(), 0);
  for (const Word& w : c.words()) in[w.bits()] = 1;
  return in;
}

// Other codewords within distance 2 of mask, ascending mask order.
std::vector<std::uint32_t> close_codewords(int n,
                                           const std::vector<std::uint8_t>& in,
                                           std::uint32_t m) {
  std::vector<std::uint32_t> out;
  for (int i = 0; i < n; ++i) {
    std::uint32_t x = m ^ (std::uint32_t{1} << i);
    if (in[x]) out.push_back(x);
    for (int j = i + 1; j < n; ++j) {
      std::uint32_t y = x ^ (std::uint32_t{1} << j);
      if (in[y]) out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int covering_radius(const Code& c) {
  require_exhaustive(c);
  const int n = c.length();
  const std::size_t space = std::size_t{1} << n;
  std::vector<std::uint8_t> marked(space, 0);
  std::size_t count = 0;
  for (const Word& w : c.words())
    if (!marked[w.bits()]) {
      marked[w.bits()] = 1;
      ++count;
    }
  int radius = 0;
  while (count < space) {
    std::vector<std::uint8_t> next = marked;
    for (std::uint32_t x = 0; x < space; ++x)
      if (marked[x])
        for (int i = 0; i < n; ++i) {
          std::uint32_t y = x ^ (std::uint32_t{1} << i);
          if (!next[y]) {
            next[y] = 1;
            ++count;
          }
        }
    marked.swap(next);
    ++radius;
  }
  return radius;
}

long long PairPartition::type_i_count() const {
  long long k = 0;
  for (const PartnerPair& p : pairs)
    if (p.kind == PairKind::type_i) ++k;
  return k;
}

std::string code_type_str(CodeType t) {
  switch (t) {
    case CodeType::A: return "A";
    case CodeType::B: return "B";
    case CodeType::C: return "C";
    case CodeType::not_applicable: return "not_applicable";
  }
  throw std::logic_error("unreachable");
}

Np1ccReport verify_np1cc(const Code& c) {
  Np1ccReport rep;
  rep.n = c.length();
  rep.M = c.size();

  if (c.empty()) {
    rep.failures.push_back("code is empty");
    return rep;
  }
  const int n = c.length();
  if (n > kExhaustiveCap) {
    rep.failures.push_back("length " + std::to_string(n) +
                           " exceeds the exhaustive verification cap of 16");
    return rep;
  }
  int r = std::countr_zero(static_cast<unsigned>(n));
  if (!std::has_single_bit(static_cast<unsigned>(n)) || r < 1) {
    rep.failures.push_back("length " + std::to_string(n) +
                           " is not 2^r for a positive integer r");
  } else {
    rep.r = r;
    long long want = 1ll << (n - r);
    if (rep.M != want)
      rep.failures.push_back("size is " + std::to_string(rep.M) +
                             ", expected 2^(n-r) = " + std::to_string(want));
  }
  if (!rep.failures.empty()) return rep;

  const auto cov = coverage_counts(c);
  const std::size_t space = std::size_t{1} << n;
  for (std::uint32_t x = 0; x < space; ++x)
    if (cov[x] == 0) {
      rep.failures.push_back("covering radius exceeds 1: word " +
                             Word(n, x).str() + " is uncovered");
      return rep;
    }

  const auto in = membership(c);
  for (const Word& w : c.words()) {
    auto close = close_codewords(n, in, w.bits());
    if (close.size() != 1) {
      rep.failures.push_back("codeword " + w.str() + " has " +
                             std::to_string(close.size()) +
                             " codewords within distance 2, expected 1");
      return rep;
    }
    if (w.bits() < close[0]) {  // emit each pair once
      PartnerPair p;
      p.a = w;
      p.b = Word(n, close[0]);
      if (p.b < p.a) std::swap(p.a, p.b);
      p.kind = distance(p.a, p.b) == 1 ? PairKind::type_i : PairKind::type_ii;
      rep.pairs.pairs.push_back(p);
    }
  }
  std::sort(rep.pairs.pairs.begin(), rep.pairs.pairs.end(),
            [](const PartnerPair& x, const PartnerPair& y) { return x.a < y.a; });
  if (2 * static_cast<long long>(rep.pairs.pairs.size()) != rep.M) {
    rep.failures.push_back("partner relation is not a perfect matching");
    return rep;
  }

  rep.k = rep.pairs.type_i_count();
  long long type_ii = static_cast<long long>(rep.pairs.pairs.size()) - rep.k;
  rep.type = (type_ii == 0) ? CodeType::A
                            : (rep.k == 0 ? CodeType::B : CodeType::C);
  for (std::uint32_t x = 0; x < space; ++x)
    if (cov[x] == 2 && !in[x]) rep.midwords.emplace_back(n, x);
  std::sort(rep.midwords.begin(), rep.midwords.end());
  rep.is_np1cc = true;
  return rep;
}

long long over_covering(const Code& c, const std::vector<Word>& ys) {
  require_exhaustive(c);
  const auto cov = coverage_counts(c);
  long long total = 0;
  for (const Word& y : ys) {
    if (y.length() != c.length())
      throw std::invalid_argument("word length differs from code length");
    if (cov[y.bits()] == 0)
      throw std::runtime_error("word " + y.str() +
                               " is uncovered; the code is not 1-covering");
    total += cov[y.bits()] - 1;
  }
  return total;
}

std::vector<Word> midwords(const Code& c) {
  Np1ccReport rep = verify_np1cc(c);
  if (!rep.is_np1cc)
    throw std::invalid_argument("not an NP1CC: " + rep.failures.front());
  return rep.midwords;
}

Word partner(const Code& c, const Word& cw) {
  require_exhaustive(c);
  if (!c.contains(cw))
    throw std::invalid_argument(cw.str() + " is not a codeword");
  const auto in = membership(c);
  auto close = close_codewords(c.length(), in, cw.bits());
  if (close.size() != 1)
    throw std::runtime_error("codeword " + cw.str() + " has " +
                             std::to_string(close.size()) +
                             " codewords within distance 2; partner is "
                             "defined only for NP1CCs");
  return Word(c.length(), close[0]);
}

PairPartition pair_partition(const Code& c) {
  require_exhaustive(c);
  const auto in = membership(c);
  PairPartition part;
  for (const Word& w : c.words()) {
    auto close = close_codewords(c.length(), in, w.bits());
    if (close.size() != 1)
      throw std::runtime_error("codeword " + w.str() + " has " +
                               std::to_string(close.size()) +
                               " codewords within distance 2, expected 1");
    if (w.bits() < close[0]) {
      PartnerPair p;
      p.a = w;
      p.b = Word(c.length(), close[0]);
      if (p.b < p.a) std::swap(p.a, p.b);
      p.kind = distance(p.a, p.b) == 1 ? PairKind::type_i : PairKind::type_ii;
      part.pairs.push_back(p);
    }
  }
  std::sort(part.pairs.begin(), part.pairs.end(),
            [](const PartnerPair& x, const PartnerPair& y) { return x.a < y.a; });
  if (2 * static_cast<long long>(part.pairs.size()) != c.size())
    throw std::runtime_error("partner relation is not a perfect matching");
  return part;
}

std::vector<Capsule> capsules(const Code& c) {
  PairPartition part = pair_partition(c);
  const int n = c.length();
  std::vector<std::uint8_t> seen(std::size_t{1} << n, 0);
  std::vector<Capsule> out;
  out.reserve(part.pairs.size());
  std::size_t covered = 0;
  for (const PartnerPair& p : part.pairs) {
    Capsule cap;
    cap.pair = p;
    for (const Word& center : {p.a, p.b})
      for (const Word& y : ball(center, 1)) {
        if (std::find(cap.cells.begin(), cap.cells.end(), y) != cap.cells.end())
          continue;
        if (seen[y.bits()])
          throw std::runtime_error("capsules overlap at " + y.str() +
                                   "; the code is not an NP1CC");
        seen[y.bits()] = 1;
        ++covered;
        cap.cells.push_back(y);
      }
    std::sort(cap.cells.begin(), cap.cells.end());
    out.push_back(std::move(cap));
  }
  if (covered != (std::size_t{1} << n))
    throw std::runtime_error("capsules do not cover the space");
  return out;
}

Radius2Census radius2_census(const Code& c) {
  require_exhaustive(c);
  const int n = c.length();
  const auto in = membership(c);
  Radius2Census cen;
  bool first_cw = true, first_non = true;
  const std::size_t space = std::size_t{1} << n;
  for (std::uint32_t x = 0; x < space; ++x) {
    long long cnt = in[x] ? 1 : 0;  // B2(x) contains x itself
    cnt += static_cast<long long>(close_codewords(n, in, x).size());
    if (in[x]) {
      cen.codeword_min = first_cw ? cnt : std::min(cen.codeword_min, cnt);
      cen.codeword_max = first_cw ? cnt : std::max(cen.codeword_max, cnt);
      first_cw = false;
    } else {
      cen.noncodeword_min = first_non ? cnt : std::min(cen.noncodeword_min, cnt);
      cen.noncodeword_max = first_non ? cnt : std::max(cen.noncodeword_max, cnt);
      first_non = false;
    }
  }
  return cen;
}

bool Radius2Census::conforms(int n) const {
  return codeword_min == 2 && codeword_max == 2 &&
         noncodeword_min == n / 2 + 1 && noncodeword_max == n / 2 + 1;
}

}  // namespace npcc
