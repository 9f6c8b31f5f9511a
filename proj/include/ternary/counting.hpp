#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "ternary/parallel.hpp"
#include "ternary/word.hpp"

namespace ternary {

/// m(n, w) for w = 0..2n: ordered pairs of words in Q^n at d1-distance w.
struct PairCountTable {
  int n = 0;
  std::vector<mpz_class> counts;

  const mpz_class& operator[](int w) const { return counts.at(static_cast<std::size_t>(w)); }
  /// m(n, w), zero outside 0..2n.
  mpz_class at(int w) const;
};

mpz_class binomial(long n, long k);
mpz_class power(long base, unsigned long exponent);

/// Coefficients of (3 + 4z + 2z^2)^n.
PairCountTable pair_count_poly(int n);
/// sum_i C(n,i) 2^i C(2i,w).  Zero for w outside 0..2n.
mpz_class pair_count_closed(int n, int w);

/// Words of weight w in Q^n at d1-distance exactly `dist` from a fixed word
/// of weight w.  Odd distances never occur inside a weight shell.
mpz_class constant_weight_sphere(int n, int w, int dist);
/// Sum of spheres of radius 0..r inside the weight-w shell.
mpz_class constant_weight_ball(int n, int w, int r);
/// |Q^n_w| = C(n,w) 2^w.
mpz_class shell_size(int n, int w);

/// Mean over all centers of |{y : d1(x, y) <= r}|, i.e. sum_{w<=r} m(n,w) / 3^n.
mpq_class avg_ball_volume(int n, int r);
/// V_q(n, r) = sum_{k<=r} C(n,k) (q-1)^k.
mpz_class hamming_ball_volume(int q, int n, int r);

/// Largest n the brute-force oracles below accept.
inline constexpr int kExhaustiveLimit = 12;

/// |{y in Q^n : d1(center, y) <= r}| by enumeration.
mpz_class d1_ball_volume_oracle(const TernaryWord& center, int r);

/// Histogram of d1 over all ordered pairs of Q^n (brute force, n <= 8).
std::vector<std::uint64_t> pair_distance_census(int n, Execution exec = Execution::Parallel);
/// Histogram of d1 from `center` to every word of its weight shell.
std::vector<std::uint64_t> shell_distance_census(const TernaryWord& center, Execution exec = Execution::Parallel);

}  // namespace ternary
