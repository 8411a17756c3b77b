#pragma once

#include <array>
#include <optional>
#include <vector>

#include "npcc/code.hpp"
#include "npcc/rational.hpp"

namespace npcc {

// Weight distribution A_i = |{c in C : wt(c) = i}|, i = 0..n.
std::vector<long long> weight_distribution(const Code& c);

// Distance distribution B_i = (1/M) |{(c,c') : d(c,c') = i}| over ordered
// pairs; B_0 = 1 and sum B_i = M. Pairwise popcount histogram.
std::vector<Rational> distance_distribution(const Code& c);

// Same quantity as the average of translate weight distributions over all
// codewords; slower cross-check route.
std::vector<Rational> distance_distribution_via_translates(const Code& c);

// Binary Krawtchouk polynomial value
//   P_i(w) = sum_j (-1)^j C(w,j) C(n-w, i-j).
Int krawtchouk(int n, int i, int w);

// Character sum over the code: sum_{v in C} (-1)^<u,v>.
long long char_sum(const Code& c, const Word& u);

// All 2^n character sums via a fast Walsh-Hadamard transform of the
// indicator vector; entry [mask] = char sum at that u. Length <= 16.
std::vector<long long> char_sums(const Code& c);

// Krawtchouk transform with factor 1/M: out_i = (1/M) sum_w in_w P_i(w).
// Applied to A it yields A'; applied to B it yields B'.
std::vector<Rational> macwilliams_transform(const std::vector<Rational>& dist,
                                            const Int& M);
std::vector<Rational> macwilliams_transform(const std::vector<long long>& dist,
                                            const Int& M);
// Inverse with factor M/2^n; inverse_transform(transform(v)) = v.
std::vector<Rational> macwilliams_inverse(const std::vector<Rational>& dist,
                                          const Int& M);

// A'_i = (1/M) sum_{wt(u)=i} char_u(C): character-sum route for the
// transformed weight distribution. Length <= 16.
std::vector<Rational> a_prime_via_characters(const Code& c);

// B'_i = (1/M^2) sum_{wt(u)=i} char_u(C)^2: character-sum route for the
// transformed distance distribution. Length <= 16.
std::vector<Rational> b_prime_via_characters(const Code& c);

// Number of nonzero B'_i with i > 0. Computes B' along both routes
// (characters and Krawtchouk transform of B) and requires them to agree.
int external_distance(const Code& c);

// For an NP1CC translate with given (A_0, A_1), the only two possibly
// nonzero transform entries beyond A'_0 = 1:
//   A'_{n/2}   = n*A_0 - (n/2)(1 - A_1) - 1
//   A'_{n/2+1} = (n/2)(1 - A_1)
// (A_0, A_1) must be one of (1,1), (1,0), (0,2), (0,1).
std::pair<Rational, Rational> solve_a_prime(int A0, int A1, int n);

// Coefficient Delta_i = (-1)^ceil(i/2) C(n/2-1, floor(i/2)) of
// (1-y)(1-y^2)^(n/2-1); zero outside 0 <= i <= n-1.
Int weight_delta(int n, int i);

// Weight distribution of an NP1CC translate with the given (A_0, A_1):
//   A_i = C(n,i)/n + (A_0 - 1/n) Delta_i + (A_0 + A_1 - 1 - 1/n) Delta_{i-1}.
// Entries are verified to be nonnegative integers.
std::vector<long long> closed_form_weight_distribution(int n, int A0, int A1);

// Weight distribution (degrees 0..n+1) of the even-parity extension of a
// zeroed NP1CC of length n = 2^r:
//   (1/(2n)) ((1+y)^(n+1) + (1-y)^(n+1)) + (1 - 1/n)(1-y^2)^(n/2).
std::vector<long long> enp1cc_weight_distribution(int n);

// True iff every codeword translate of this zeroed code has the same
// weight distribution as the code itself.
bool is_distance_invariant(const Code& c);

struct Table1Row {
  const char* situation;  // which words sit at distance <= 1 from 0
  int A0, A1;
  Rational a_half, a_half_plus_1;  // A'_{n/2}, A'_{n/2+1}
  const char* admissible_types;
};

// The four possible (A_0, A_1) signatures of NP1CC translates.
std::array<Table1Row, 4> translate_signature_table(int n);
std::optional<Table1Row> match_translate_signature(int n, int A0, int A1);

struct Spectrum {
  int n = 0;
  long long M = 0;
  std::vector<long long> A;          // of the (optionally translated) code
  std::vector<Rational> B;           // translation invariant
  std::vector<Rational> A_prime;
  std::vector<Rational> B_prime;     // translation invariant
  int s_prime = 0;
};

Spectrum analyze(const Code& c, const std::optional<Word>& translate_by = {});

}  // namespace npcc
