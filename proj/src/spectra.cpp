#include "npcc/spectra.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace npcc {

namespace {

constexpr int kCharCap = 16;  // 2^n indicator tables

void require_char_cap(const Code& c) {
  if (c.length() > kCharCap)
    throw std::invalid_argument("character-sum routes capped at length 16");
}

std::vector<Rational> to_rational(const std::vector<long long>& v) {
  return std::vector<Rational>(v.begin(), v.end());
}

std::vector<Rational> krawtchouk_sum(const std::vector<Rational>& dist,
                                     const Rational& factor) {
  const int n = static_cast<int>(dist.size()) - 1;
  std::vector<Rational> out(dist.size());
  for (int i = 0; i <= n; ++i) {
    Rational acc = 0;
    for (int w = 0; w <= n; ++w)
      if (dist[static_cast<std::size_t>(w)] != 0)
        acc += dist[static_cast<std::size_t>(w)] *
               Rational(krawtchouk(n, i, w));
    out[static_cast<std::size_t>(i)] = acc * factor;
  }
  return out;
}

}  // namespace

std::vector<long long> weight_distribution(const Code& c) {
  std::vector<long long> a(static_cast<std::size_t>(c.length()) + 1, 0);
  for (const Word& w : c.words()) ++a[static_cast<std::size_t>(weight(w))];
  return a;
}

std::vector<Rational> distance_distribution(const Code& c) {
  if (c.empty()) throw std::invalid_argument("empty code");
  std::vector<long long> counts(static_cast<std::size_t>(c.length()) + 1, 0);
  const auto& ws = c.words();
  for (std::size_t i = 0; i < ws.size(); ++i) {
    ++counts[0];  // the (c, c) pair
    for (std::size_t j = i + 1; j < ws.size(); ++j)
      counts[static_cast<std::size_t>(
          std::popcount(ws[i].bits() ^ ws[j].bits()))] += 2;
  }
  std::vector<Rational> b(counts.size());
  const Rational m(c.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    b[i] = Rational(counts[i]) / m;
  return b;
}

std::vector<Rational> distance_distribution_via_translates(const Code& c) {
  if (c.empty()) throw std::invalid_argument("empty code");
  std::vector<Rational> b(static_cast<std::size_t>(c.length()) + 1, 0);
  for (const Word& e : c.words()) {
    const auto a = weight_distribution(translate(c, e));
    for (std::size_t i = 0; i < b.size(); ++i) b[i] += a[i];
  }
  const Rational m(c.size());
  for (Rational& v : b) v /= m;
  return b;
}

Int krawtchouk(int n, int i, int w) {
  if (n < 0 || i < 0 || i > n || w < 0 || w > n)
    throw std::invalid_argument("krawtchouk arguments out of range");
  Int acc = 0;
  for (int j = std::max(0, i - (n - w)); j <= std::min(i, w); ++j) {
    Int term = binomial(w, j) * binomial(n - w, i - j);
    acc += (j % 2) ? -term : term;
  }
  return acc;
}

long long char_sum(const Code& c, const Word& u) {
  if (u.length() != c.length())
    throw std::invalid_argument("word length differs from code length");
  long long acc = 0;
  for (const Word& v : c.words())
    acc += (std::popcount(u.bits() & v.bits()) & 1) ? -1 : 1;
  return acc;
}

std::vector<long long> char_sums(const Code& c) {
  require_char_cap(c);
  const std::size_t space = std::size_t{1} << c.length();
  std::vector<long long> f(space, 0);
  for (const Word& w : c.words()) f[w.bits()] = 1;
  for (std::size_t h = 1; h < space; h <<= 1)
    for (std::size_t i = 0; i < space; i += h << 1)
      for (std::size_t j = i; j < i + h; ++j) {
        long long x = f[j], y = f[j + h];
        f[j] = x + y;
        f[j + h] = x - y;
      }
  return f;
}

std::vector<Rational> macwilliams_transform(const std::vector<Rational>& dist,
                                            const Int& M) {
  if (dist.empty()) throw std::invalid_argument("empty distribution");
  if (M <= 0) throw std::invalid_argument("M must be positive");
  return krawtchouk_sum(dist, Rational(1) / Rational(M));
}

std::vector<Rational> macwilliams_transform(const std::vector<long long>& dist,
                                            const Int& M) {
  return macwilliams_transform(to_rational(dist), M);
}

std::vector<Rational> macwilliams_inverse(const std::vector<Rational>& dist,
                                          const Int& M) {
  if (dist.empty()) throw std::invalid_argument("empty distribution");
  if (M <= 0) throw std::invalid_argument("M must be positive");
  const int n = static_cast<int>(dist.size()) - 1;
  return krawtchouk_sum(dist, Rational(M) / Rational(pow2(n)));
}

std::vector<Rational> a_prime_via_characters(const Code& c) {
  require_char_cap(c);
  const auto chi = char_sums(c);
  std::vector<Rational> out(static_cast<std::size_t>(c.length()) + 1, 0);
  for (std::size_t u = 0; u < chi.size(); ++u)
    out[static_cast<std::size_t>(std::popcount(static_cast<std::uint32_t>(u)))] +=
        Rational(chi[u]);
  const Rational m(c.size());
  for (Rational& v : out) v /= m;
  return out;
}

std::vector<Rational> b_prime_via_characters(const Code& c) {
  require_char_cap(c);
  const auto chi = char_sums(c);
  std::vector<Rational> out(static_cast<std::size_t>(c.length()) + 1, 0);
  for (std::size_t u = 0; u < chi.size(); ++u)
    out[static_cast<std::size_t>(std::popcount(static_cast<std::uint32_t>(u)))] +=
        Rational(chi[u] * chi[u]);
  const Rational m2 = Rational(c.size()) * Rational(c.size());
  for (Rational& v : out) v /= m2;
  return out;
}

int external_distance(const Code& c) {
  const auto via_chars = b_prime_via_characters(c);
  const auto via_transform =
      macwilliams_transform(distance_distribution(c), Int(c.size()));
  if (via_chars != via_transform)
    throw std::logic_error(
        "character and transform routes disagree on the distance transform");
  int s = 0;
  for (std::size_t i = 1; i < via_chars.size(); ++i)
    if (via_chars[i] != 0) ++s;
  return s;
}

std::pair<Rational, Rational> solve_a_prime(int A0, int A1, int n) {
  if (n < 2 || !std::has_single_bit(static_cast<unsigned>(n)))
    throw std::invalid_argument("n must be 2^r with r >= 1");
  const bool valid = (A0 == 1 && (A1 == 0 || A1 == 1)) ||
                     (A0 == 0 && (A1 == 1 || A1 == 2));
  if (!valid)
    throw std::invalid_argument("(A0, A1) must be one of (1,1), (1,0), (0,2), (0,1)");
  const Rational half(n, 2);
  Rational at_half = Rational(n) * A0 - half * (1 - A1) - 1;
  Rational above = half * (1 - A1);
  return {at_half, above};
}

Int weight_delta(int n, int i) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("n must be even");
  if (i < 0 || i > n - 1) return 0;
  Int v = binomial(n / 2 - 1, i / 2);
  return (((i + 1) / 2) % 2) ? -v : v;
}

std::vector<long long> closed_form_weight_distribution(int n, int A0, int A1) {
  solve_a_prime(A0, A1, n);  // validates n and the signature
  const Rational inv_n = Rational(1, n);
  const Rational c1 = Rational(A0) - inv_n;
  const Rational c2 = Rational(A0 + A1 - 1) - inv_n;
  std::vector<long long> out(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i <= n; ++i) {
    Rational v = Rational(binomial(n, i)) * inv_n +
                 c1 * Rational(weight_delta(n, i)) +
                 c2 * Rational(weight_delta(n, i - 1));
    if (!is_integer(v) || v < 0)
      throw std::runtime_error("closed-form weight distribution is not a "
                               "nonnegative integer vector");
    out[static_cast<std::size_t>(i)] =
        static_cast<long long>(to_integer(v));
  }
  return out;
}

std::vector<long long> enp1cc_weight_distribution(int n) {
  if (n < 2 || !std::has_single_bit(static_cast<unsigned>(n)))
    throw std::invalid_argument("n must be 2^r with r >= 1");
  std::vector<long long> out(static_cast<std::size_t>(n) + 2, 0);
  const Rational lead(1, 2 * n);
  const Rational tail = Rational(1) - Rational(1, n);
  for (int i = 0; i <= n + 1; ++i) {
    // (1+y)^(n+1) + (1-y)^(n+1) doubles even-degree coefficients.
    Rational v = (i % 2 == 0) ? lead * 2 * Rational(binomial(n + 1, i))
                              : Rational(0);
    if (i % 2 == 0) {
      // coefficient of y^i in (1-y^2)^(n/2)
      Int c = binomial(n / 2, i / 2);
      v += tail * Rational((i / 2) % 2 ? -c : c);
    }
    if (!is_integer(v) || v < 0)
      throw std::runtime_error("extension weight distribution is not a "
                               "nonnegative integer vector");
    out[static_cast<std::size_t>(i)] = static_cast<long long>(to_integer(v));
  }
  return out;
}

bool is_distance_invariant(const Code& c) {
  if (c.empty()) throw std::invalid_argument("empty code");
  if (!c.contains(Word::zero(c.length())))
    throw std::invalid_argument("distance invariance is defined for zeroed codes");
  const auto base = weight_distribution(c);
  for (const Word& e : c.words())
    if (weight_distribution(translate(c, e)) != base) return false;
  return true;
}

std::array<Table1Row, 4> translate_signature_table(int n) {
  auto solved = [&](int A0, int A1) { return solve_a_prime(A0, A1, n); };
  auto [h11, u11] = solved(1, 1);
  auto [h10, u10] = solved(1, 0);
  auto [h02, u02] = solved(0, 2);
  auto [h01, u01] = solved(0, 1);
  return {
      Table1Row{"codeword in a type I pair", 1, 1, h11, u11, "A,C"},
      Table1Row{"codeword in a type II pair", 1, 0, h10, u10, "B,C"},
      Table1Row{"midword", 0, 2, h02, u02, "B,C"},
      Table1Row{"covered once, not a codeword", 0, 1, h01, u01, "A,B,C"},
  };
}

std::optional<Table1Row> match_translate_signature(int n, int A0, int A1) {
  for (const Table1Row& row : translate_signature_table(n))
    if (row.A0 == A0 && row.A1 == A1) return row;
  return std::nullopt;
}

Spectrum analyze(const Code& c, const std::optional<Word>& translate_by) {
  Spectrum s;
  s.n = c.length();
  s.M = c.size();
  const Code view = translate_by ? translate(c, *translate_by) : c;
  s.A = weight_distribution(view);
  s.B = distance_distribution(c);
  s.A_prime = macwilliams_transform(s.A, Int(s.M));
  s.B_prime = b_prime_via_characters(c);
  const auto check = macwilliams_transform(s.B, Int(s.M));
  if (check != s.B_prime)
    throw std::logic_error(
        "character and transform routes disagree on the distance transform");
  s.s_prime = 0;
  for (std::size_t i = 1; i < s.B_prime.size(); ++i)
    if (s.B_prime[i] != 0) ++s.s_prime;
  return s;
}

}  // namespace npcc
