#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ternary/code.hpp"
#include "ternary/parallel.hpp"

namespace ternary {

/// Counts of binary codewords by Hamming weight, index w = 0..n.
struct WeightDistribution {
  std::vector<long long> counts;

  long long operator[](int w) const { return counts.at(static_cast<std::size_t>(w)); }
  long long total() const;
};

WeightDistribution weight_distribution(const BinaryCode& code);

/// Greedy binary code in lexicographic (integer) order with d_H >= d.
/// Lengths up to 24.
BinaryCode binary_lexicode(int n, int d);

/// (3^n + 1) / 2, the size of the even-zeros code.
mpz_class even_zeros_size(int n);
/// All words of Q^n with an even number of zero coordinates.  n <= 12.
TernaryCode even_zeros_code(int n);

/// 0 -> -1, 1 -> +1 coordinatewise; d1 of the image is twice d_H.
TernaryCode signed_binary_code(const BinaryCode& code);

/// Inner codes indexed by length: inner.at(w) has length w.
using InnerCodes = std::map<int, BinaryCode>;

/// Binary lexicodes of every length 0..n with d_H >= ceil(d/2).
InnerCodes lexicode_inner_codes(int n, int d);

/// Each outer word u of weight w is combined with each inner word v of length
/// w: the result is supported on u with sign (0 -> -1, 1 -> +1) taken from v
/// in increasing support order.
///
/// Throws std::invalid_argument when d_H(outer) < d, when an occurring weight
/// has no inner code, or when an inner code has d_H < ceil(d/2).
TernaryCode support_construction(const BinaryCode& outer, const InnerCodes& inner, int d);

/// Sum over w of A_w |inner(w)|, the size support_construction produces.
long long support_construction_size(const WeightDistribution& outer, const InnerCodes& inner);

/// Tries every translate x + outer (x in {0,1}^n, n <= 16) and runs
/// support_construction on the one with the largest predicted size.
TernaryCode coset_scan_construction(const BinaryCode& outer, const InnerCodes& inner, int d,
                                    Execution exec = Execution::Parallel);

struct PhiShiftStrategy {
  enum class Kind { Exhaustive, Randomized };
  Kind kind = Kind::Exhaustive;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  static PhiShiftStrategy exhaustive() { return {}; }
  static PhiShiftStrategy randomized(std::uint64_t trials, std::uint64_t seed) {
    return {Kind::Randomized, trials, seed};
  }
};

/// Number of words of x + code (coordinatewise xor) lying in the image of phi.
std::size_t phi_image_hits(const BinaryCode& code, std::uint64_t shift);

/// Best shift over the strategy's candidates; ties go to the smallest shift.
std::uint64_t best_phi_shift(const BinaryCode& code, const PhiShiftStrategy& strategy,
                             Execution exec = Execution::Parallel);

/// phi^{-1}((x + b) restricted to the image of phi) for the best shift x.
/// Throws std::invalid_argument on odd length; the exhaustive strategy needs
/// length <= 24.
TernaryCode phi_shift_construction(const BinaryCode& b, const PhiShiftStrategy& strategy,
                                   Execution exec = Execution::Parallel);

struct ConstructionReport {
  std::string family;
  int length = 0;
  int claimed_distance = 0;
  std::size_t size = 0;
  MinDistance distance = MinDistance::unbounded();
  bool distance_ok = false;

  std::string to_string() const;
};

ConstructionReport verify_construction(const std::string& family, const TernaryCode& code, int claimed_distance);

}  // namespace ternary
