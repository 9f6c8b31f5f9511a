#include "ternary/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ternary/code.hpp"

namespace ternary {

namespace {

std::uint64_t pow3(int n) {
  std::uint64_t p = 1;
  for (int i = 0; i < n; ++i) p *= 3;
  return p;
}

void require_exhaustive(int n, int limit) {
  if (n > limit) {
    throw LimitExceeded("length " + std::to_string(n) + " exceeds the exhaustive limit " +
                                std::to_string(limit));
  }
}

}  // namespace

mpz_class PairCountTable::at(int w) const {
  if (w < 0 || w >= static_cast<int>(counts.size())) return 0;
  return counts[static_cast<std::size_t>(w)];
}

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class power(long base, unsigned long exponent) {
  mpz_class r;
  mpz_class b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exponent);
  return r;
}

PairCountTable pair_count_poly(int n) {
  if (n < 1) throw std::invalid_argument("pair_count_poly needs n >= 1");
  std::vector<mpz_class> poly{1};
  const mpz_class base[3] = {3, 4, 2};
  for (int step = 0; step < n; ++step) {
    std::vector<mpz_class> next(poly.size() + 2, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      for (std::size_t k = 0; k < 3; ++k) next[i + k] += poly[i] * base[k];
    }
    poly = std::move(next);
  }
  return PairCountTable{n, std::move(poly)};
}

mpz_class pair_count_closed(int n, int w) {
  if (n < 1) throw std::invalid_argument("pair_count_closed needs n >= 1");
  if (w < 0 || w > 2 * n) return 0;
  mpz_class total = 0;
  for (int i = 0; i <= n; ++i) total += binomial(n, i) * power(2, static_cast<unsigned long>(i)) * binomial(2 * i, w);
  return total;
}

mpz_class constant_weight_sphere(int n, int w, int dist) {
  if (w < 0 || w > n) throw std::invalid_argument("weight outside 0..n");
  if (dist < 0 || dist % 2 != 0) return 0;
  const int i = dist / 2;
  mpz_class total = 0;
  for (int j = 0; j <= std::min({i, n - w, w}); ++j) {
    total += binomial(w, j) * binomial(w - j, i - j) * binomial(n - w, j) * power(2, static_cast<unsigned long>(j));
  }
  return total;
}

mpz_class constant_weight_ball(int n, int w, int r) {
  if (w < 0 || w > n) throw std::invalid_argument("weight outside 0..n");
  mpz_class total = 0;
  for (int i = 0; 2 * i <= r; ++i) total += constant_weight_sphere(n, w, 2 * i);
  return total;
}

mpz_class shell_size(int n, int w) { return binomial(n, w) * power(2, static_cast<unsigned long>(std::max(w, 0))); }

mpq_class avg_ball_volume(int n, int r) {
  if (n < 1 || r < 0) throw std::invalid_argument("avg_ball_volume needs n >= 1 and r >= 0");
  const auto table = pair_count_poly(n);
  mpz_class pairs = 0;
  for (int w = 0; w <= std::min(r, 2 * n); ++w) pairs += table[w];
  mpq_class v(pairs, power(3, static_cast<unsigned long>(n)));
  v.canonicalize();
  return v;
}

mpz_class hamming_ball_volume(int q, int n, int r) {
  if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
  mpz_class total = 0;
  for (int k = 0; k <= std::min(r, n); ++k) total += binomial(n, k) * power(q - 1, static_cast<unsigned long>(k));
  return total;
}

mpz_class d1_ball_volume_oracle(const TernaryWord& center, int r) {
  const int n = center.length();
  require_exhaustive(n, kExhaustiveLimit);
  const std::uint64_t total = pow3(n);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (d1_distance(center, TernaryWord::from_index(n, idx)) <= r) ++count;
  }
  return mpz_class(static_cast<unsigned long>(count));
}

std::vector<std::uint64_t> pair_distance_census(int n, Execution exec) {
  require_exhaustive(n, 8);
  const auto words = all_ternary_words(n);
  const auto total = static_cast<std::int64_t>(words.size());
  const std::size_t bins = static_cast<std::size_t>(2 * n + 1);
  std::vector<std::uint64_t> hist(bins, 0);

  if (exec == Execution::Serial) {
    for (std::int64_t i = 0; i < total; ++i) {
      for (std::int64_t j = 0; j < total; ++j) ++hist[static_cast<std::size_t>(d1_distance(words[i], words[j]))];
    }
    return hist;
  }

#pragma omp parallel
  {
    std::vector<std::uint64_t> local(bins, 0);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
      for (std::int64_t j = 0; j < total; ++j) ++local[static_cast<std::size_t>(d1_distance(words[i], words[j]))];
    }
#pragma omp critical
    for (std::size_t b = 0; b < bins; ++b) hist[b] += local[b];
  }
  return hist;
}

std::vector<std::uint64_t> shell_distance_census(const TernaryWord& center, Execution exec) {
  const int n = center.length();
  require_exhaustive(n, kExhaustiveLimit);
  const int w = center.weight();
  const auto total = static_cast<std::int64_t>(pow3(n));
  const std::size_t bins = static_cast<std::size_t>(2 * n + 1);
  std::vector<std::uint64_t> hist(bins, 0);

  auto visit = [&](std::int64_t idx, std::vector<std::uint64_t>& h) {
    const auto y = TernaryWord::from_index(n, static_cast<std::uint64_t>(idx));
    if (y.weight() == w) ++h[static_cast<std::size_t>(d1_distance(center, y))];
  };

  if (exec == Execution::Serial) {
    for (std::int64_t idx = 0; idx < total; ++idx) visit(idx, hist);
    return hist;
  }

#pragma omp parallel
  {
    std::vector<std::uint64_t> local(bins, 0);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < total; ++idx) visit(idx, local);
#pragma omp critical
    for (std::size_t b = 0; b < bins; ++b) hist[b] += local[b];
  }
  return hist;
}

}  // namespace ternary
