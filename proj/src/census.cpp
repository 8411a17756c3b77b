#include "npcc/census.hpp"

#include <atomic>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "npcc/spectra.hpp"
#include "npcc/word.hpp"

namespace npcc {

namespace {

std::string code_label(const Code& c) {
  std::string out = "{" + c.words().front().str();
  if (c.size() > 1) out += ",...";
  out += "}";
  return out;
}

// Situation of a word x relative to the code, as a translate signature:
// (A0, A1) = (membership, number of codewords at distance one).
std::pair<int, int> translate_sig(bool member, int cover) {
  int a0 = member ? 1 : 0;
  return {a0, cover - a0};
}

}  // namespace

std::vector<std::string> audit(const Code& c) {
  std::vector<std::string> bad;
  Np1ccReport rep = verify_np1cc(c);
  if (!rep.is_np1cc) {
    for (const std::string& f : rep.failures) bad.push_back("verify: " + f);
    return bad;
  }
  int n = rep.n;
  long long M = rep.M;
  std::size_t space = std::size_t{1} << n;

  std::vector<std::uint8_t> member(space, 0);
  for (const Word& w : c.words()) member[w.bits()] = 1;
  std::vector<std::uint8_t> cover(space, 0);
  for (const Word& w : c.words()) {
    ++cover[w.bits()];
    for (int i = 0; i < n; ++i) ++cover[w.bits() ^ (1u << i)];
  }

  long long twice = 0;
  for (std::size_t x = 0; x < space; ++x) {
    if (cover[x] < 1 || cover[x] > 2)
      bad.push_back("coverage: word " + Word(n, static_cast<std::uint32_t>(x)).str() +
                    " is covered " + std::to_string(cover[x]) + " times");
    if (cover[x] == 2) ++twice;
  }
  if (twice != M)
    bad.push_back("coverage: " + std::to_string(twice) + " words covered twice, expected " +
                  std::to_string(M));

  for (std::size_t x = 0; x < space; ++x) {
    if (member[x]) continue;
    std::uint32_t xm = static_cast<std::uint32_t>(x);
    int excess = cover[xm] - 1;
    for (int i = 0; i < n; ++i) excess += cover[xm ^ (1u << i)] - 1;
    if (excess != 1)
      bad.push_back("ball: non-codeword " + Word(n, xm).str() + " has ball over-covering " +
                    std::to_string(excess) + ", expected 1");
  }

  Radius2Census r2 = radius2_census(c);
  if (!r2.conforms(n))
    bad.push_back("radius-2: codewords see [" + std::to_string(r2.codeword_min) + "," +
                  std::to_string(r2.codeword_max) + "], non-codewords [" +
                  std::to_string(r2.noncodeword_min) + "," + std::to_string(r2.noncodeword_max) +
                  "], expected 2 and " + std::to_string(n / 2 + 1));

  try {
    capsules(c);
  } catch (const std::exception& e) {
    bad.push_back(std::string("capsules: ") + e.what());
  }

  if (n > 2) {
    long long even = 0;
    for (const Word& w : c.words())
      if (weight(w) % 2 == 0) ++even;
    if (even != M / 2)
      bad.push_back("parity: " + std::to_string(even) + " even-weight codewords, expected " +
                    std::to_string(M / 2));
    if (rep.k % 2 != 0)
      bad.push_back("pairs: distance-1 pair count " + std::to_string(rep.k) + " is odd");
    long long type_ii = 0, type_ii_even = 0;
    for (const PartnerPair& p : rep.pairs.pairs) {
      if (p.kind != PairKind::type_ii) continue;
      ++type_ii;
      if (weight(p.a) % 2 == 0) ++type_ii_even;
    }
    if (type_ii_even * 2 != type_ii)
      bad.push_back("pairs: " + std::to_string(type_ii_even) + " of " + std::to_string(type_ii) +
                    " distance-2 pairs are even-weight, expected half");
  }

  std::vector<Rational> B = distance_distribution(c);
  std::vector<Rational> bp_transform = macwilliams_transform(B, M);
  std::vector<Rational> bp_chars = b_prime_via_characters(c);
  if (bp_transform != bp_chars)
    bad.push_back("transform: distance-route and character-route disagree");
  int s_prime = 0;
  for (int i = 1; i <= n; ++i) {
    if (bp_transform[static_cast<std::size_t>(i)] == 0) continue;
    ++s_prime;
    if (i != n / 2 && i != n / 2 + 1)
      bad.push_back("transform: nonzero component at index " + std::to_string(i) +
                    ", outside {" + std::to_string(n / 2) + "," + std::to_string(n / 2 + 1) + "}");
  }
  int want_s = (n == 2) ? 1 : (rep.type == CodeType::A ? 1 : 2);
  if (s_prime != want_s)
    bad.push_back("transform: " + std::to_string(s_prime) + " nonzero components beyond 0, expected " +
                  std::to_string(want_s) + " for type " + code_type_str(rep.type));

  // Translate signatures: every word's (A0, A1) must be a table row; the
  // first word realizing each row must match the closed-form distribution.
  std::map<std::pair<int, int>, std::uint32_t> reps;
  for (std::size_t x = 0; x < space; ++x) {
    auto sig = translate_sig(member[x] != 0, cover[x]);
    if (!match_translate_signature(n, sig.first, sig.second)) {
      bad.push_back("signature: word " + Word(n, static_cast<std::uint32_t>(x)).str() +
                    " has (A0,A1)=(" + std::to_string(sig.first) + "," +
                    std::to_string(sig.second) + "), not in the table");
      continue;
    }
    reps.emplace(sig, static_cast<std::uint32_t>(x));
  }
  for (const auto& [sig, mask] : reps) {
    Word v(n, mask);
    std::vector<long long> actual = weight_distribution(translate(c, v));
    std::vector<long long> predicted;
    try {
      predicted = closed_form_weight_distribution(n, sig.first, sig.second);
    } catch (const std::exception& e) {
      bad.push_back("closed form: (" + std::to_string(sig.first) + "," +
                    std::to_string(sig.second) + "): " + e.what());
      continue;
    }
    if (actual != predicted)
      bad.push_back("closed form: translate by " + v.str() +
                    " deviates from the two-coefficient formula");
  }

  return bad;
}

namespace {

// Depth-first enumeration of M-subsets in increasing mask order. Prunes any
// partial set in which some member already has two others within distance 2.
void dfs(int n, std::size_t M, std::uint32_t next, std::vector<std::uint32_t>& chosen,
         std::vector<int>& close, std::vector<Code>& out) {
  if (chosen.size() == M) {
    Code cand = Code::from_masks(n, chosen);
    if (verify_np1cc(cand).is_np1cc) out.push_back(std::move(cand));
    return;
  }
  std::uint32_t limit = 1u << n;
  for (std::uint32_t m = next; m < limit; ++m) {
    if (static_cast<std::size_t>(limit - m) < M - chosen.size()) break;
    bool ok = true;
    int mine = 0;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      if (std::popcount(chosen[i] ^ m) > 2) continue;
      if (close[i] >= 1 || ++mine > 1) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (std::size_t i = 0; i < chosen.size(); ++i)
      if (std::popcount(chosen[i] ^ m) <= 2) ++close[i];
    chosen.push_back(m);
    close.push_back(mine);
    dfs(n, M, m + 1, chosen, close, out);
    close.pop_back();
    chosen.pop_back();
    for (std::size_t i = 0; i < chosen.size(); ++i)
      if (std::popcount(chosen[i] ^ m) <= 2) --close[i];
  }
}

// All codes whose smallest mask is `first`.
std::vector<Code> codes_starting_at(int n, std::size_t M, std::uint32_t first) {
  std::vector<Code> out;
  std::vector<std::uint32_t> chosen{first};
  std::vector<int> close{0};
  dfs(n, M, first + 1, chosen, close, out);
  return out;
}

}  // namespace

std::vector<Code> enumerate_np1cc(int n) {
  if (n != 2 && n != 4) throw std::invalid_argument("enumerate_np1cc: length must be 2 or 4");
  int r = std::countr_zero(static_cast<unsigned>(n));
  std::size_t M = std::size_t{1} << (n - r);
  std::vector<Code> out;
  for (std::uint32_t f = 0; f < (1u << n); ++f)
    for (Code& c : codes_starting_at(n, M, f)) out.push_back(std::move(c));
  return out;
}

CensusResult run_census(int n, int threads) {
  if (n != 2 && n != 4) throw std::invalid_argument("run_census: length must be 2 or 4");
  if (threads < 1) threads = 1;
  if (threads > 64) threads = 64;
  int r = std::countr_zero(static_cast<unsigned>(n));
  std::size_t M = std::size_t{1} << (n - r);
  std::uint32_t starts = 1u << n;

  std::vector<std::vector<Code>> buckets(starts);
  if (threads == 1) {
    for (std::uint32_t f = 0; f < starts; ++f) buckets[f] = codes_starting_at(n, M, f);
  } else {
    std::atomic<std::uint32_t> cursor{0};
    auto worker = [&] {
      for (;;) {
        std::uint32_t f = cursor.fetch_add(1);
        if (f >= starts) return;
        buckets[f] = codes_starting_at(n, M, f);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  CensusResult result;
  result.n = n;
  for (std::uint32_t f = 0; f < starts; ++f) {
    for (Code& code : buckets[f]) {
      Np1ccReport rep = verify_np1cc(code);
      CensusEntry entry{std::move(code), rep.type, rep.k};
      ++result.total;
      switch (rep.type) {
        case CodeType::A: ++result.type_a; break;
        case CodeType::B: ++result.type_b; break;
        case CodeType::C: ++result.type_c; break;
        case CodeType::not_applicable: break;
      }
      ++result.k_histogram[rep.k];
      std::vector<std::string> bad = audit(entry.code);
      for (const std::string& b : bad)
        result.violations.push_back("code " + std::to_string(result.total - 1) + " " +
                                    code_label(entry.code) + ": " + b);
      result.entries.push_back(std::move(entry));
    }
  }
  return result;
}

std::string census_json(const CensusResult& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["total"] = r.total;
  j["types"] = {{"A", r.type_a}, {"B", r.type_b}, {"C", r.type_c}};
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [k, count] : r.k_histogram) hist[std::to_string(k)] = count;
  j["k_histogram"] = hist;
  nlohmann::ordered_json codes = nlohmann::ordered_json::array();
  for (const CensusEntry& e : r.entries) {
    nlohmann::ordered_json item;
    nlohmann::ordered_json words = nlohmann::ordered_json::array();
    for (const Word& w : e.code.words()) words.push_back(w.str());
    item["words"] = words;
    item["type"] = code_type_str(e.type);
    item["k"] = e.k;
    codes.push_back(item);
  }
  j["codes"] = codes;
  j["violations"] = r.violations;
  return j.dump(2) + "\n";
}

}  // namespace npcc
