#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ternary {

/// Longest ternary word the packed representation supports.
inline constexpr int kMaxTernaryLength = 32;
/// Longest binary word; twice the ternary limit so phi_map always fits.
inline constexpr int kMaxBinaryLength = 64;

/// A word over Q = {-1, 0, +1}.
///
/// Stored as two bit planes: bit i of `plus` is set when symbol i is +1 and
/// bit i of `minus` when it is -1.  The pair (plus_i, minus_i) is exactly the
/// image of symbol i under phi, so d1 reduces to two popcounts.
class TernaryWord {
 public:
  TernaryWord() = default;
  explicit TernaryWord(std::span<const int> symbols);
  TernaryWord(std::initializer_list<int> symbols);

  static TernaryWord zeros(int length);
  static TernaryWord from_planes(int length, std::uint64_t plus, std::uint64_t minus);
  /// Word whose base-3 digits (most significant first, 0 -> -1, 1 -> 0,
  /// 2 -> +1) spell `index`.  Index order equals lexicographic word order.
  static TernaryWord from_index(int length, std::uint64_t index);

  int length() const noexcept { return length_; }
  int operator[](int i) const noexcept;
  std::uint64_t plus_plane() const noexcept { return plus_; }
  std::uint64_t minus_plane() const noexcept { return minus_; }
  std::uint64_t support() const noexcept { return plus_ | minus_; }
  /// Number of nonzero coordinates.
  int weight() const noexcept;
  std::uint64_t index() const noexcept;
  std::vector<int> symbols() const;

  TernaryWord negated() const noexcept { return from_planes(length_, minus_, plus_); }
  /// Drops coordinate `position`, shifting later coordinates down.
  TernaryWord without(int position) const;
  TernaryWord appended(int symbol) const;
  std::string to_string() const;

  friend bool operator==(const TernaryWord&, const TernaryWord&) = default;
  /// Lexicographic on symbols with -1 < 0 < +1.
  friend std::strong_ordering operator<=>(const TernaryWord& a, const TernaryWord& b) noexcept;

 private:
  int length_ = 0;
  std::uint64_t plus_ = 0;
  std::uint64_t minus_ = 0;
};

/// A word over {0, 1}; bit i is coordinate i.
class BinaryWord {
 public:
  BinaryWord() = default;
  BinaryWord(int length, std::uint64_t bits);
  explicit BinaryWord(std::span<const int> symbols);
  BinaryWord(std::initializer_list<int> symbols);

  int length() const noexcept { return length_; }
  std::uint64_t bits() const noexcept { return bits_; }
  int operator[](int i) const noexcept { return static_cast<int>((bits_ >> i) & 1U); }
  int weight() const noexcept;
  std::string to_string() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) noexcept;

 private:
  int length_ = 0;
  std::uint64_t bits_ = 0;
};

int d1_distance(const TernaryWord& x, const TernaryWord& y);
int hamming_distance(const TernaryWord& x, const TernaryWord& y);
int hamming_distance(const BinaryWord& x, const BinaryWord& y);

/// phi(-1) = (0,1), phi(0) = (0,0), phi(+1) = (1,0), coordinatewise.
BinaryWord phi_map(const TernaryWord& x);
/// Inverse of phi_map; nullopt when some coordinate pair is (1,1).
/// Throws std::invalid_argument on odd length.
std::optional<TernaryWord> phi_inverse(const BinaryWord& b);

/// Minimum pairwise distance of a code.  Codes with fewer than two words
/// have no pairs and satisfy every distance requirement.
class MinDistance {
 public:
  static MinDistance unbounded() { return MinDistance{}; }
  static MinDistance of(int value) { return MinDistance{value}; }

  bool is_unbounded() const noexcept { return !value_.has_value(); }
  int value() const;
  bool satisfies(int d) const noexcept { return is_unbounded() || *value_ >= d; }
  std::string to_string() const { return is_unbounded() ? "inf" : std::to_string(*value_); }

  friend bool operator==(const MinDistance&, const MinDistance&) = default;

 private:
  MinDistance() = default;
  explicit MinDistance(int v) : value_(v) {}
  std::optional<int> value_;
};

enum class Metric { D1, Hamming };

/// Raised when a requested search or enumeration is larger than allowed.
class LimitExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ternary
