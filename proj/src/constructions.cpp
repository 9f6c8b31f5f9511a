#include "ternary/constructions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ternary/counting.hpp"

namespace ternary {

namespace {

std::uint64_t low_mask(int length) {
  return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

int ceil_half(int d) { return (d + 1) / 2; }

/// Positions 0, 2, 4, ... below `length`: the first bit of each phi pair.
std::uint64_t pair_mask(int length) { return 0x5555555555555555ULL & low_mask(length); }

bool in_phi_image(std::uint64_t bits, int length) { return (bits & (bits >> 1) & pair_mask(length)) == 0; }

void for_each_in_hamming_ball(std::uint64_t centre, int n, int r, std::vector<bool>& mark) {
  auto recurse = [&](auto&& self, int from, int left, std::uint64_t word) -> void {
    mark[word] = true;
    if (left == 0) return;
    for (int i = from; i < n; ++i) self(self, i + 1, left - 1, word ^ (std::uint64_t{1} << i));
  };
  recurse(recurse, 0, r, centre);
}

}  // namespace

long long WeightDistribution::total() const { return std::accumulate(counts.begin(), counts.end(), 0LL); }

WeightDistribution weight_distribution(const BinaryCode& code) {
  WeightDistribution wd;
  wd.counts.assign(static_cast<std::size_t>(code.length() + 1), 0);
  for (const auto& w : code) ++wd.counts[static_cast<std::size_t>(w.weight())];
  return wd;
}

BinaryCode binary_lexicode(int n, int d) {
  if (n < 0 || n > 24) throw LimitExceeded("binary_lexicode length outside 0..24");
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> blocked(total, false);
  std::vector<BinaryWord> kept;
  for (std::uint64_t x = 0; x < total; ++x) {
    if (blocked[x]) continue;
    kept.emplace_back(n, x);
    for_each_in_hamming_ball(x, n, std::max(d - 1, 0), blocked);
  }
  return BinaryCode(n, std::move(kept));
}

mpz_class even_zeros_size(int n) {
  if (n < 1) throw std::invalid_argument("even_zeros_size needs n >= 1");
  return (power(3, static_cast<unsigned long>(n)) + 1) / 2;
}

TernaryCode even_zeros_code(int n) {
  if (n < 1 || n > 12) throw LimitExceeded("even_zeros_code materialises lengths 1..12 only");
  std::vector<TernaryWord> words;
  for (const auto& x : all_ternary_words(n)) {
    if ((n - x.weight()) % 2 == 0) words.push_back(x);
  }
  return TernaryCode(n, std::move(words));
}

TernaryCode signed_binary_code(const BinaryCode& code) {
  std::vector<TernaryWord> out;
  out.reserve(code.size());
  const std::uint64_t all = low_mask(code.length());
  for (const auto& b : code) out.push_back(TernaryWord::from_planes(code.length(), b.bits(), ~b.bits() & all));
  return TernaryCode(code.length(), std::move(out));
}

InnerCodes lexicode_inner_codes(int n, int d) {
  InnerCodes inner;
  for (int w = 0; w <= n; ++w) inner.emplace(w, binary_lexicode(w, ceil_half(d)));
  return inner;
}

long long support_construction_size(const WeightDistribution& outer, const InnerCodes& inner) {
  long long total = 0;
  for (std::size_t w = 0; w < outer.counts.size(); ++w) {
    if (outer.counts[w] == 0) continue;
    const auto it = inner.find(static_cast<int>(w));
    if (it == inner.end()) throw std::invalid_argument("no inner code of length " + std::to_string(w));
    total += outer.counts[w] * static_cast<long long>(it->second.size());
  }
  return total;
}

TernaryCode support_construction(const BinaryCode& outer, const InnerCodes& inner, int d) {
  if (!min_distance(outer).satisfies(d)) {
    throw std::invalid_argument("outer code has minimum Hamming distance " + min_distance(outer).to_string() +
                                " < " + std::to_string(d));
  }
  const int n = outer.length();
  std::vector<TernaryWord> out;
  for (const auto& u : outer) {
    const int w = u.weight();
    const auto it = inner.find(w);
    if (it == inner.end()) throw std::invalid_argument("no inner code of length " + std::to_string(w));
    const BinaryCode& signs = it->second;
    if (signs.length() != w) throw std::invalid_argument("inner code for weight " + std::to_string(w) + " has wrong length");
    if (!min_distance(signs).satisfies(ceil_half(d))) {
      throw std::invalid_argument("inner code of length " + std::to_string(w) + " has minimum distance " +
                                  min_distance(signs).to_string() + " < " + std::to_string(ceil_half(d)));
    }
    std::vector<int> support;
    for (int i = 0; i < n; ++i) {
      if (u[i]) support.push_back(i);
    }
    for (const auto& v : signs) {
      std::uint64_t plus = 0;
      std::uint64_t minus = 0;
      for (int k = 0; k < w; ++k) {
        const std::uint64_t bit = std::uint64_t{1} << support[static_cast<std::size_t>(k)];
        (v[k] ? plus : minus) |= bit;
      }
      out.push_back(TernaryWord::from_planes(n, plus, minus));
    }
  }
  return TernaryCode(n, std::move(out));
}

TernaryCode coset_scan_construction(const BinaryCode& outer, const InnerCodes& inner, int d, Execution exec) {
  const int n = outer.length();
  if (n > 16) throw LimitExceeded("coset scan limited to length 16");
  const auto shifts = static_cast<std::int64_t>(std::uint64_t{1} << n);
  std::vector<long long> inner_size(static_cast<std::size_t>(n + 1), -1);
  for (int w = 0; w <= n; ++w) {
    if (auto it = inner.find(w); it != inner.end()) inner_size[static_cast<std::size_t>(w)] = static_cast<long long>(it->second.size());
  }
  std::vector<long long> predicted(static_cast<std::size_t>(shifts));
  auto evaluate = [&](std::int64_t x) {
    long long total = 0;
    for (const auto& c : outer) {
      const auto s = inner_size[static_cast<std::size_t>(std::popcount(c.bits() ^ static_cast<std::uint64_t>(x)))];
      total += std::max(s, 0LL);
    }
    predicted[static_cast<std::size_t>(x)] = total;
  };
  if (exec == Execution::Serial) {
    for (std::int64_t x = 0; x < shifts; ++x) evaluate(x);
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t x = 0; x < shifts; ++x) evaluate(x);
  }
  const auto best = static_cast<std::uint64_t>(std::max_element(predicted.begin(), predicted.end()) - predicted.begin());
  std::vector<BinaryWord> moved;
  for (const auto& c : outer) moved.emplace_back(n, c.bits() ^ best);
  return support_construction(BinaryCode(n, std::move(moved)), inner, d);
}

std::size_t phi_image_hits(const BinaryCode& code, std::uint64_t shift) {
  std::size_t hits = 0;
  for (const auto& c : code) hits += in_phi_image(c.bits() ^ shift, code.length());
  return hits;
}

std::uint64_t best_phi_shift(const BinaryCode& code, const PhiShiftStrategy& strategy, Execution exec) {
  const int len = code.length();
  if (len % 2 != 0) throw std::invalid_argument("phi shift needs an even-length binary code");
  std::vector<std::uint64_t> candidates;
  if (strategy.kind == PhiShiftStrategy::Kind::Exhaustive) {
    if (len > 24) throw LimitExceeded("exhaustive phi shift limited to length 24");
    candidates.resize(std::size_t{1} << len);
    std::iota(candidates.begin(), candidates.end(), std::uint64_t{0});
  } else {
    std::mt19937_64 rng(strategy.seed);
    candidates.push_back(0);
    for (std::uint64_t t = 0; t < strategy.trials; ++t) candidates.push_back(rng() & low_mask(len));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  }
  const auto count = static_cast<std::int64_t>(candidates.size());
  std::vector<std::size_t> hits(candidates.size());
  if (exec == Execution::Serial) {
    for (std::int64_t i = 0; i < count; ++i) hits[static_cast<std::size_t>(i)] = phi_image_hits(code, candidates[static_cast<std::size_t>(i)]);
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) hits[static_cast<std::size_t>(i)] = phi_image_hits(code, candidates[static_cast<std::size_t>(i)]);
  }
  const auto best = std::max_element(hits.begin(), hits.end()) - hits.begin();
  return candidates[static_cast<std::size_t>(best)];
}

TernaryCode phi_shift_construction(const BinaryCode& b, const PhiShiftStrategy& strategy, Execution exec) {
  const std::uint64_t shift = best_phi_shift(b, strategy, exec);
  const int n = b.length() / 2;
  std::vector<TernaryWord> out;
  for (const auto& c : b) {
    if (auto x = phi_inverse(BinaryWord(b.length(), c.bits() ^ shift))) out.push_back(*x);
  }
  return TernaryCode(n, std::move(out));
}

std::string ConstructionReport::to_string() const {
  std::ostringstream os;
  os << "family=" << family << " n=" << length << " size=" << size << " min_distance=" << distance.to_string()
     << " claimed_d=" << claimed_distance << " status=" << (distance_ok ? "ok" : "VIOLATED");
  return os.str();
}

ConstructionReport verify_construction(const std::string& family, const TernaryCode& code, int claimed_distance) {
  ConstructionReport r;
  r.family = family;
  r.length = code.length();
  r.claimed_distance = claimed_distance;
  r.size = code.size();
  r.distance = min_distance(code);
  r.distance_ok = r.distance.satisfies(claimed_distance);
  return r;
}

}  // namespace ternary
