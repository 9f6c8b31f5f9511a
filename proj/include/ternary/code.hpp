#pragma once

#include <cstddef>
#include <vector>

#include "ternary/word.hpp"

namespace ternary {

/// Finite set of equal-length ternary words, kept sorted and duplicate free.
class TernaryCode {
 public:
  explicit TernaryCode(int length) : length_(length) {}
  /// Throws std::invalid_argument on mixed lengths or duplicate words.
  TernaryCode(int length, std::vector<TernaryWord> words);

  int length() const noexcept { return length_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const std::vector<TernaryWord>& words() const noexcept { return words_; }
  bool contains(const TernaryWord& w) const;

  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }

  friend bool operator==(const TernaryCode&, const TernaryCode&) = default;

 private:
  int length_;
  std::vector<TernaryWord> words_;
};

class BinaryCode {
 public:
  explicit BinaryCode(int length) : length_(length) {}
  BinaryCode(int length, std::vector<BinaryWord> words);

  int length() const noexcept { return length_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const std::vector<BinaryWord>& words() const noexcept { return words_; }

  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }

  friend bool operator==(const BinaryCode&, const BinaryCode&) = default;

 private:
  int length_;
  std::vector<BinaryWord> words_;
};

MinDistance min_distance(const TernaryCode& code, Metric metric = Metric::D1);
MinDistance min_distance(const BinaryCode& code);

/// C_i: words whose coordinate `position` equals `symbol`, with that
/// coordinate removed.  `position` defaults to the last coordinate.
/// Throws std::invalid_argument when the code length is below 2.
TernaryCode shorten(const TernaryCode& code, int symbol, int position = -1);

/// Applies the same coordinate permutation to every word:
/// new coordinate i takes old coordinate perm[i].
TernaryCode permute_coordinates(const TernaryCode& code, const std::vector<int>& perm);

/// Every word of Q^n in lexicographic order.  n must be at most 20.
std::vector<TernaryWord> all_ternary_words(int n);

}  // namespace ternary
