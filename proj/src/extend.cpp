#include "npcc/extend.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "npcc/construct.hpp"
#include "npcc/np1cc.hpp"
#include "npcc/perfect.hpp"
#include "npcc/word.hpp"

namespace npcc {

char coord_tag_char(CoordTag t) {
  switch (t) {
    case CoordTag::A: return 'A';
    case CoordTag::B: return 'B';
    case CoordTag::C: return 'C';
  }
  throw std::logic_error("coord_tag_char: bad tag");
}

int PunctureProfile::count(CoordTag t) const {
  int out = 0;
  for (CoordTag tag : tags)
    if (tag == t) ++out;
  return out;
}

Code extend_np1cc(const Code& c) {
  Np1ccReport rep = verify_np1cc(c);
  if (!rep.is_np1cc)
    throw std::invalid_argument("extend_np1cc: input fails verification: " +
                                (rep.failures.empty() ? std::string("unknown") : rep.failures.front()));
  int n = c.length();
  if (n + 1 > kMaxWordLength)
    throw std::invalid_argument("extend_np1cc: extension exceeds word capacity");
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(c.size()));
  for (const Word& w : c.words())
    out.emplace_back(n + 1, w.bits() | (static_cast<std::uint32_t>(parity(w)) << n));
  return Code(n + 1, std::move(out));
}

PunctureProfile puncture_scan(const Code& extended) {
  int len = extended.length();
  if (len < 3 || len > 17)
    throw std::invalid_argument("puncture_scan: length must be in [3, 17]");
  if (extended.empty()) throw std::invalid_argument("puncture_scan: empty code");

  std::vector<std::uint8_t> member(1u << len, 0);
  for (const Word& w : extended.words()) {
    if (weight(w) % 2 != 0)
      throw std::invalid_argument("puncture_scan: codeword with odd weight: " + w.str());
    member[w.bits()] = 1;
  }

  // Every codeword must have exactly one other codeword at distance 2.
  std::vector<PartnerPair> pairs;
  for (const Word& w : extended.words()) {
    std::uint32_t m = w.bits();
    std::uint32_t found = 0;
    int hits = 0;
    for (int i = 0; i < len; ++i) {
      for (int j = i + 1; j < len; ++j) {
        std::uint32_t other = m ^ (1u << i) ^ (1u << j);
        if (member[other]) {
          found = other;
          ++hits;
        }
      }
    }
    if (hits != 1)
      throw std::invalid_argument("puncture_scan: codeword " + w.str() + " has " +
                                  std::to_string(hits) + " partners at distance 2");
    if (m < found) {
      Word a(len, m), b(len, found);
      if (b < a) std::swap(a, b);
      pairs.push_back({a, b, PairKind::type_ii});
    }
  }

  PunctureProfile profile;
  profile.extended_length = len;
  profile.tags.resize(static_cast<std::size_t>(len));
  for (int coord = 1; coord <= len; ++coord) {
    std::uint32_t bit = 1u << (coord - 1);
    long long disagree = 0;
    for (const PartnerPair& p : pairs)
      if ((p.a.bits() ^ p.b.bits()) & bit) ++disagree;
    CoordTag tag = CoordTag::C;
    if (disagree == static_cast<long long>(pairs.size()))
      tag = CoordTag::A;
    else if (disagree == 0)
      tag = CoordTag::B;
    profile.tags[static_cast<std::size_t>(coord - 1)] = tag;

    Code punctured = puncture(extended, coord);
    Np1ccReport rep = verify_np1cc(punctured);
    if (!rep.is_np1cc)
      throw std::runtime_error("puncture_scan: puncturing coordinate " + std::to_string(coord) +
                               " does not yield a verified code");
    CodeType want = tag == CoordTag::A   ? CodeType::A
                    : tag == CoordTag::B ? CodeType::B
                                         : CodeType::C;
    if (rep.type != want)
      throw std::runtime_error("puncture_scan: coordinate " + std::to_string(coord) +
                               " tagged " + coord_tag_char(tag) + " but punctured code is type " +
                               code_type_str(rep.type));
  }
  return profile;
}

Code build_abc_fixture() {
  Code base = hamming_code(3);
  LambdaTable flat = zero_lambda(base);
  LambdaTable flip = flat;
  flip[base.words()[1]] = 1;  // smallest nonzero codeword

  Code v0 = vasiliev(base, flat);
  Code v1 = vasiliev(base, flip);

  // The two length-15 codes agree except on 128 codewords that differ
  // only in their last (inner parity) coordinate.
  long long shared = intersection_size(v0, v1);
  if (shared != v0.size() - 128)
    throw std::logic_error("build_abc_fixture: unexpected overlap between the two codes");
  for (const Word& w : v0.words())
    if (!v1.contains(w) && !v1.contains(w.flipped(15)))
      throw std::logic_error("build_abc_fixture: codes differ off the parity coordinate");

  Code even_part = extend_even(v0);
  Code odd_part = translate(extend_even(v1), Word::unit(16, 16));
  return type_a_union(even_part, odd_part);
}

std::string equivalence_key(const Code& c) { return extend_np1cc(c).serialize(); }

}  // namespace npcc
