#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ternary/code.hpp"
#include "ternary/parallel.hpp"

namespace ternary {

/// Dense bit set sized at construction; the clique search works on these.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int size) : size_(size), blocks_(static_cast<std::size_t>((size + 63) / 64), 0) {}

  int size() const noexcept { return size_; }
  bool test(int v) const noexcept { return (blocks_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U; }
  void set(int v) noexcept { blocks_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) noexcept { blocks_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool none() const noexcept;
  int count() const noexcept;
  /// Lowest member, or -1 when empty.
  int first() const noexcept;
  VertexSet& operator&=(const VertexSet& other) noexcept;
  VertexSet& subtract(const VertexSet& other) noexcept;

 private:
  int size_ = 0;
  std::vector<std::uint64_t> blocks_;
};

/// Vertices are the words of a code space; an edge joins two words whose
/// distance is at least the target minimum distance.
class CompatibilityGraph {
 public:
  CompatibilityGraph(int vertex_count, const std::function<bool(int, int)>& compatible);

  int vertex_count() const noexcept { return static_cast<int>(rows_.size()); }
  bool adjacent(int u, int v) const noexcept { return rows_[static_cast<std::size_t>(u)].test(v); }
  const VertexSet& neighbours(int v) const noexcept { return rows_[static_cast<std::size_t>(v)]; }
  int degree(int v) const noexcept { return rows_[static_cast<std::size_t>(v)].count(); }

 private:
  std::vector<VertexSet> rows_;
};

struct CliqueResult {
  std::vector<int> clique;  ///< original vertex ids, ascending
  int upper = 0;            ///< certified upper bound on the clique number
  bool complete = false;
  std::uint64_t nodes = 0;
};

/// Branch-and-bound maximum clique with greedy-colouring bounds.
///
/// Every maximum clique is assumed to be movable by a graph automorphism onto
/// one containing a vertex from `roots`; each root is solved as an
/// independent subproblem, seeded with the greedy clique taken in vertex
/// order.  `budget` caps node expansions per root subproblem.  The result
/// does not depend on `exec`.
CliqueResult max_clique(const CompatibilityGraph& graph, std::span<const int> roots, std::uint64_t budget,
                        Execution exec = Execution::Parallel);

/// Default cap on the number of vertices (3^7).
inline constexpr std::uint64_t kDefaultVertexLimit = 2187;

struct SearchOptions {
  std::uint64_t budget = 20'000'000;
  std::uint64_t vertex_limit = kDefaultVertexLimit;
  Execution exec = Execution::Parallel;
};

/// Exact value when `complete`, otherwise the certified interval [lower, upper].
struct SearchOutcome {
  long long lower = 0;
  long long upper = 0;
  bool complete = false;
  std::uint64_t nodes = 0;

  bool exact() const noexcept { return lower == upper; }
  std::string to_string() const;
};

struct TernarySearchResult {
  SearchOutcome outcome;
  TernaryCode witness{0};
};

/// Words over {0, ..., q-1}, one digit per coordinate.
using QaryWord = std::vector<int>;

struct HammingSearchResult {
  SearchOutcome outcome;
  int q = 2;
  int n = 0;
  std::vector<QaryWord> witness;
};

/// T(n, d) on Q^n.  Throws LimitExceeded when 3^n exceeds the vertex limit.
TernarySearchResult exact_T(int n, int d, const SearchOptions& options = {});
/// A_q(n, d) on {0..q-1}^n under the Hamming metric.
HammingSearchResult exact_A(int q, int n, int d, const SearchOptions& options = {});
/// Largest code inside the weight-w shell Q^n_w with minimum d1-distance d.
TernarySearchResult exact_T_constant_weight(int n, int w, int d, const SearchOptions& options = {});

enum class GreedyOrder { Lexicographic, Random };

/// Greedy code: scan Q^n in the given order and keep each word at distance
/// >= d from all kept words.  Random order is a seeded Fisher-Yates shuffle.
TernaryCode greedy_gv_code(int n, int d, GreedyOrder order = GreedyOrder::Lexicographic, std::uint64_t seed = 0);

/// Calls `visit(index)` for every word of Q^n within d1-distance r of x.
void for_each_in_d1_ball(const TernaryWord& x, int r, const std::function<void(std::uint64_t)>& visit);

/// Per-coordinate symbol counts and the ordered pairwise distance sum.
struct ColumnStats {
  int length = 0;
  long long size = 0;
  /// counts[i][s + 1] = number of codewords with symbol s at coordinate i.
  std::vector<std::array<long long, 3>> counts;
  /// sum_i 2 m0(i) (m1(i) + m-1(i)) + 4 m1(i) m-1(i)
  long long pair_distance_sum = 0;

  long long zeros(int i) const { return counts[static_cast<std::size_t>(i)][1]; }
};

ColumnStats column_stats(const TernaryCode& code);

struct PlotkinReport {
  ColumnStats stats;
  long long min_distance_side = 0;  ///< M (M - 1) d
  long long column_side = 0;        ///< n M^2 - sum_i m0(i)^2
  long long zero_square_sum = 0;    ///< sum_i m0(i)^2
  /// Brute-force sum of d1 over ordered pairs; computed for codes up to 4096 words.
  std::optional<long long> direct_pair_sum;

  long long lower_slack() const { return stats.pair_distance_sum - min_distance_side; }
  long long upper_slack() const { return column_side - stats.pair_distance_sum; }
  bool chain_holds() const { return lower_slack() >= 0 && upper_slack() >= 0; }
  bool identity_holds() const { return !direct_pair_sum || *direct_pair_sum == stats.pair_distance_sum; }
};

/// Evaluates M(M-1)d <= S <= nM^2 - sum m0^2 on a concrete code.
/// Throws std::invalid_argument when the code is empty or its minimum
/// distance is below d.
PlotkinReport plotkin_witness_check(const TernaryCode& code, int d);

}  // namespace ternary
