#include "ternary/code.hpp"

#include <algorithm>
#include <limits>

namespace ternary {

namespace {

template <typename Word>
void normalize(int length, std::vector<Word>& words) {
  for (const auto& w : words) {
    if (w.length() != length) {
      throw std::invalid_argument("word of length " + std::to_string(w.length()) +
                                  " in code of length " + std::to_string(length));
    }
  }
  std::sort(words.begin(), words.end());
  if (std::adjacent_find(words.begin(), words.end()) != words.end()) {
    throw std::invalid_argument("duplicate word in code");
  }
}

template <typename Code, typename Dist>
MinDistance min_pairwise(const Code& code, Dist dist) {
  const auto& w = code.words();
  if (w.size() < 2) return MinDistance::unbounded();
  int best = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) best = std::min(best, dist(w[i], w[j]));
  }
  return MinDistance::of(best);
}

}  // namespace

TernaryCode::TernaryCode(int length, std::vector<TernaryWord> words) : length_(length), words_(std::move(words)) {
  normalize(length_, words_);
}

bool TernaryCode::contains(const TernaryWord& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

BinaryCode::BinaryCode(int length, std::vector<BinaryWord> words) : length_(length), words_(std::move(words)) {
  normalize(length_, words_);
}

MinDistance min_distance(const TernaryCode& code, Metric metric) {
  if (metric == Metric::D1) {
    return min_pairwise(code, [](const TernaryWord& a, const TernaryWord& b) { return d1_distance(a, b); });
  }
  return min_pairwise(code, [](const TernaryWord& a, const TernaryWord& b) { return hamming_distance(a, b); });
}

MinDistance min_distance(const BinaryCode& code) {
  return min_pairwise(code, [](const BinaryWord& a, const BinaryWord& b) { return hamming_distance(a, b); });
}

TernaryCode shorten(const TernaryCode& code, int symbol, int position) {
  if (code.length() < 2) throw std::invalid_argument("shortening needs a code of length at least 2");
  if (symbol < -1 || symbol > 1) throw std::invalid_argument("shortening symbol not in {-1, 0, 1}");
  if (position < 0) position = code.length() - 1;
  std::vector<TernaryWord> out;
  for (const auto& w : code) {
    if (w[position] == symbol) out.push_back(w.without(position));
  }
  return TernaryCode(code.length() - 1, std::move(out));
}

TernaryCode permute_coordinates(const TernaryCode& code, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != code.length()) throw std::invalid_argument("permutation length mismatch");
  std::vector<bool> seen(perm.size());
  for (int p : perm) {
    if (p < 0 || p >= code.length() || seen[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  std::vector<TernaryWord> out;
  out.reserve(code.size());
  for (const auto& w : code) {
    std::vector<int> s(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) s[i] = w[perm[i]];
    out.emplace_back(s);
  }
  return TernaryCode(code.length(), std::move(out));
}

std::vector<TernaryWord> all_ternary_words(int n) {
  if (n < 0) throw std::invalid_argument("negative length");
  if (n > 20) throw LimitExceeded("refusing to enumerate Q^" + std::to_string(n));
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  std::vector<TernaryWord> out;
  out.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(TernaryWord::from_index(n, i));
  return out;
}

}  // namespace ternary
