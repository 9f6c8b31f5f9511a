#include "ternary/word.hpp"

#include <bit>

namespace ternary {

namespace {

void check_ternary_length(int length) {
  if (length < 0 || length > kMaxTernaryLength) {
    throw std::invalid_argument("ternary word length " + std::to_string(length) +
                                " outside [0, " + std::to_string(kMaxTernaryLength) + "]");
  }
}

void check_binary_length(int length) {
  if (length < 0 || length > kMaxBinaryLength) {
    throw std::invalid_argument("binary word length " + std::to_string(length) +
                                " outside [0, " + std::to_string(kMaxBinaryLength) + "]");
  }
}

std::uint64_t low_mask(int length) {
  return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

void check_same_length(int a, int b) {
  if (a != b) {
    throw std::invalid_argument("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

TernaryWord::TernaryWord(std::span<const int> symbols) {
  check_ternary_length(static_cast<int>(symbols.size()));
  length_ = static_cast<int>(symbols.size());
  for (int i = 0; i < length_; ++i) {
    const int s = symbols[static_cast<std::size_t>(i)];
    if (s == 1) {
      plus_ |= std::uint64_t{1} << i;
    } else if (s == -1) {
      minus_ |= std::uint64_t{1} << i;
    } else if (s != 0) {
      throw std::invalid_argument("symbol " + std::to_string(s) + " not in {-1, 0, 1}");
    }
  }
}

TernaryWord::TernaryWord(std::initializer_list<int> symbols)
    : TernaryWord(std::span<const int>(symbols.begin(), symbols.size())) {}

TernaryWord TernaryWord::zeros(int length) {
  check_ternary_length(length);
  return from_planes(length, 0, 0);
}

TernaryWord TernaryWord::from_planes(int length, std::uint64_t plus, std::uint64_t minus) {
  check_ternary_length(length);
  if ((plus & minus) != 0 || ((plus | minus) & ~low_mask(length)) != 0) {
    throw std::invalid_argument("inconsistent bit planes for ternary word");
  }
  TernaryWord w;
  w.length_ = length;
  w.plus_ = plus;
  w.minus_ = minus;
  return w;
}

TernaryWord TernaryWord::from_index(int length, std::uint64_t index) {
  check_ternary_length(length);
  std::uint64_t total = 1;
  for (int i = 0; i < length; ++i) total *= 3;
  if (index >= total) throw std::invalid_argument("index " + std::to_string(index) + " outside Q^" + std::to_string(length));
  TernaryWord w;
  w.length_ = length;
  for (int i = length - 1; i >= 0; --i) {
    const auto digit = index % 3;
    index /= 3;
    if (digit == 0) {
      w.minus_ |= std::uint64_t{1} << i;
    } else if (digit == 2) {
      w.plus_ |= std::uint64_t{1} << i;
    }
  }
  return w;
}

int TernaryWord::operator[](int i) const noexcept {
  if ((plus_ >> i) & 1U) return 1;
  if ((minus_ >> i) & 1U) return -1;
  return 0;
}

int TernaryWord::weight() const noexcept { return std::popcount(support()); }

std::uint64_t TernaryWord::index() const noexcept {
  std::uint64_t idx = 0;
  for (int i = 0; i < length_; ++i) {
    idx = idx * 3 + static_cast<std::uint64_t>((*this)[i] + 1);
  }
  return idx;
}

std::vector<int> TernaryWord::symbols() const {
  std::vector<int> out(static_cast<std::size_t>(length_));
  for (int i = 0; i < length_; ++i) out[static_cast<std::size_t>(i)] = (*this)[i];
  return out;
}

TernaryWord TernaryWord::without(int position) const {
  if (position < 0 || position >= length_) {
    throw std::invalid_argument("coordinate " + std::to_string(position) + " out of range");
  }
  const std::uint64_t below = low_mask(position);
  auto squeeze = [&](std::uint64_t plane) { return (plane & below) | ((plane >> 1) & ~below); };
  return from_planes(length_ - 1, squeeze(plus_), squeeze(minus_));
}

TernaryWord TernaryWord::appended(int symbol) const {
  check_ternary_length(length_ + 1);
  const std::uint64_t bit = std::uint64_t{1} << length_;
  switch (symbol) {
    case 1: return from_planes(length_ + 1, plus_ | bit, minus_);
    case 0: return from_planes(length_ + 1, plus_, minus_);
    case -1: return from_planes(length_ + 1, plus_, minus_ | bit);
    default: throw std::invalid_argument("symbol " + std::to_string(symbol) + " not in {-1, 0, 1}");
  }
}

std::string TernaryWord::to_string() const {
  std::string s;
  for (int i = 0; i < length_; ++i) {
    if (i) s += ' ';
    s += std::to_string((*this)[i]);
  }
  return s;
}

std::strong_ordering operator<=>(const TernaryWord& a, const TernaryWord& b) noexcept {
  if (auto c = a.length_ <=> b.length_; c != 0) return c;
  for (int i = 0; i < a.length_; ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

BinaryWord::BinaryWord(int length, std::uint64_t bits) : length_(length), bits_(bits) {
  check_binary_length(length);
  if ((bits & ~low_mask(length)) != 0) throw std::invalid_argument("bits set beyond word length");
}

BinaryWord::BinaryWord(std::span<const int> symbols) {
  check_binary_length(static_cast<int>(symbols.size()));
  length_ = static_cast<int>(symbols.size());
  for (int i = 0; i < length_; ++i) {
    const int s = symbols[static_cast<std::size_t>(i)];
    if (s == 1) {
      bits_ |= std::uint64_t{1} << i;
    } else if (s != 0) {
      throw std::invalid_argument("symbol " + std::to_string(s) + " not in {0, 1}");
    }
  }
}

BinaryWord::BinaryWord(std::initializer_list<int> symbols)
    : BinaryWord(std::span<const int>(symbols.begin(), symbols.size())) {}

int BinaryWord::weight() const noexcept { return std::popcount(bits_); }

std::string BinaryWord::to_string() const {
  std::string s;
  for (int i = 0; i < length_; ++i) {
    if (i) s += ' ';
    s += static_cast<char>('0' + (*this)[i]);
  }
  return s;
}

std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) noexcept {
  if (auto c = a.length_ <=> b.length_; c != 0) return c;
  for (int i = 0; i < a.length_; ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

int d1_distance(const TernaryWord& x, const TernaryWord& y) {
  check_same_length(x.length(), y.length());
  return std::popcount(x.plus_plane() ^ y.plus_plane()) + std::popcount(x.minus_plane() ^ y.minus_plane());
}

int hamming_distance(const TernaryWord& x, const TernaryWord& y) {
  check_same_length(x.length(), y.length());
  return std::popcount((x.plus_plane() ^ y.plus_plane()) | (x.minus_plane() ^ y.minus_plane()));
}

int hamming_distance(const BinaryWord& x, const BinaryWord& y) {
  check_same_length(x.length(), y.length());
  return std::popcount(x.bits() ^ y.bits());
}

BinaryWord phi_map(const TernaryWord& x) {
  std::uint64_t bits = 0;
  for (int i = 0; i < x.length(); ++i) {
    const int s = x[i];
    if (s == 1) bits |= std::uint64_t{1} << (2 * i);
    if (s == -1) bits |= std::uint64_t{1} << (2 * i + 1);
  }
  return BinaryWord(2 * x.length(), bits);
}

std::optional<TernaryWord> phi_inverse(const BinaryWord& b) {
  if (b.length() % 2 != 0) {
    throw std::invalid_argument("phi_inverse needs even length, got " + std::to_string(b.length()));
  }
  const int n = b.length() / 2;
  std::uint64_t plus = 0;
  std::uint64_t minus = 0;
  for (int i = 0; i < n; ++i) {
    const int first = b[2 * i];
    const int second = b[2 * i + 1];
    if (first && second) return std::nullopt;
    if (first) plus |= std::uint64_t{1} << i;
    if (second) minus |= std::uint64_t{1} << i;
  }
  return TernaryWord::from_planes(n, plus, minus);
}

int MinDistance::value() const {
  if (!value_) throw std::logic_error("minimum distance of a code with fewer than two words is unbounded");
  return *value_;
}

}  // namespace ternary
