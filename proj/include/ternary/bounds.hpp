#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "ternary/code.hpp"
#include "ternary/search.hpp"

namespace ternary {

/// Where a bound on T(n, d) came from.
enum class Family {
  Trivial,              // T >= 1
  WholeSpace,           // T <= 3^n, and T = 3^n for d <= 1
  BaseCase,             // exact values at n = 1
  BeyondDiameter,       // d > 2n leaves a single word
  Puncture,             // T(n,d) <= 3 T(n-1,d)
  Mix,                  // T(n,d) <= T(n-1,d) + T(n-1,d-1)
  Shorten,              // T(n,d) <= T(n-1,d-2)
  Plotkin,              // T(n,d) <= floor(d/(d-n)) for d > n
  PlotkinSquare,        // T(d,d) <= floor(2d + 1/2 + sqrt(2d + 1/4))
  TernaryHammingUpper,  // T(n,d) <= A3(n, ceil(d/2))
  PhiEmbeddingUpper,    // T(n,d) <= A2(2n, d)
  TernaryHammingLower,  // T(n,d) >= A3(n, d)
  SignedBinary,         // T(n,d) >= A2(n, ceil(d/2))
  PhiShift,             // T(n,d) >= ceil((3/4)^n A2(2n, d))
  SupportConstruction,  // T(n,d) >= sum_w A_w A2(w, ceil(d/2)) over a binary lexicode
  CosetAverage,         // T(n,d) >= ceil(A2(n,d) 2^-n sum_w C(n,w) A2(w, ceil(d/2)))
  AverageBallGv,        // T(n,d) >= ceil(3^{2n} / sum_{w<d} m(n,w))
  ConstantWeightGv,     // T(n,d) >= ceil(|Q^n_w| / V(n, d-1, w)), best w
  EvenZeros,            // T(n,2) >= (3^n + 1)/2
  Search,               // clique search result or interval
  MonotoneDistance,     // T(n,d) >= T(n,d+1), T(n,d) <= T(n,d-1)
  MonotoneLength,       // T(n,d) >= T(n-1,d), T(n,d) <= T(n+1,d)
};

std::string_view family_name(Family f);

struct Provenance {
  Family family = Family::Trivial;
  /// Family parameters: referenced (n, d) pairs for recursions, w for the
  /// constant-weight bound, nothing otherwise.
  std::vector<long> params;
  /// Free-form detail, e.g. which source supplied an A_q value.
  std::string note;

  std::string to_string() const;
};

struct Bound {
  mpz_class value;
  Provenance source;
};

struct BoundEntry {
  int n = 0;
  int d = 0;
  Bound lower;
  Bound upper;

  bool exact() const { return lower.value == upper.value; }
};

/// Lower and upper bounds on A_q(n, d) with their sources.
struct HammingBoundEntry {
  int q = 2;
  int n = 0;
  int d = 0;
  mpz_class lower;
  mpz_class upper;
  std::string lower_source;
  std::string upper_source;
};

/// Rows of the bundled A_q table: "q n d lower upper source".
std::vector<HammingBoundEntry> parse_hamming_table(std::string_view text);
const std::vector<HammingBoundEntry>& bundled_hamming_table();

/// Supplies A_q(n, d) bounds, best of: closed-form rules (d <= 2, d >= n),
/// exact search for small spaces, the bundled table, the GV lower bound and
/// the Singleton upper bound.  Results are cached; not thread safe.
class HammingBounds {
 public:
  struct Options {
    bool use_search = true;
    std::uint64_t search_vertex_limit = 81;
    std::uint64_t search_budget = 2'000'000;
  };

  HammingBounds();
  explicit HammingBounds(Options options);

  const HammingBoundEntry& get(int q, int n, int d);

 private:
  HammingBoundEntry compute(int q, int n, int d) const;

  Options options_;
  std::map<std::tuple<int, int, int>, HammingBoundEntry> cache_;
  std::map<std::tuple<int, int, int>, HammingBoundEntry> bundled_;
};

/// Bounds on T(n, d) for 1 <= n <= n_max and 1 <= d <= d_max.
class BoundTable {
 public:
  BoundTable(int n_max, int d_max);

  int n_max() const noexcept { return n_max_; }
  int d_max() const noexcept { return d_max_; }
  bool contains(int n, int d) const noexcept { return n >= 1 && n <= n_max_ && d >= 1 && d <= d_max_; }
  BoundEntry& at(int n, int d);
  const BoundEntry& at(int n, int d) const;
  const std::vector<BoundEntry>& entries() const noexcept { return entries_; }

  /// Current bounds for any n >= 1 and integer d: d <= 0 gives 3^n,
  /// d > 2n gives 1, otherwise the stored entry.
  mpz_class lower_value(int n, int d) const;
  mpz_class upper_value(int n, int d) const;

  /// Tightens a bound; returns true only on strict improvement.
  bool raise_lower(int n, int d, const mpz_class& value, const Provenance& source);
  bool lower_upper(int n, int d, const mpz_class& value, const Provenance& source);

 private:
  int n_max_;
  int d_max_;
  std::vector<BoundEntry> entries_;
};

struct TableOptions {
  /// Feed clique-search results for spaces within `search.vertex_limit`.
  bool use_search = false;
  SearchOptions search{.budget = 2'000'000, .vertex_limit = 243, .exec = Execution::Parallel};
  HammingBounds::Options hamming{};
  /// Longest outer lexicode used by the support construction bound.
  int support_max_length = 16;
};

class InconsistentBounds : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Seeds base cases, whole-space and beyond-diameter rows.
void seed_table(BoundTable& table);
bool upper_recursions(BoundTable& table);
bool upper_hamming_bridge(BoundTable& table, HammingBounds& hamming);
bool upper_plotkin(BoundTable& table);
bool lower_all(BoundTable& table, HammingBounds& hamming, const TableOptions& options = {});
bool apply_search(BoundTable& table, const SearchOptions& options);
bool monotone_closure(BoundTable& table);
/// Throws InconsistentBounds naming both provenances if lower > upper anywhere.
void check_consistency(const BoundTable& table);

/// Runs every family and the recursions to a fixed point.
BoundTable build_table(int n_max, int d_max, const TableOptions& options = {});
BoundTable build_table(int n_max, int d_max, HammingBounds& hamming, const TableOptions& options = {});

enum class Side { Lower, Upper };

/// Recomputes the value a provenance claims for T(n, d) from the table and
/// Hamming bounds as they stand.  Used to audit a finished table.
mpz_class replay(const BoundTable& table, HammingBounds& hamming, int n, int d, const Provenance& source, Side side,
                 const TableOptions& options = {});

/// floor(d / (d - n)) for d > n.
mpz_class plotkin_bound(int n, int d);
/// floor(2d + 1/2 + sqrt(2d + 1/4)) computed with integer square roots.
mpz_class plotkin_square_bound(int d);
/// ceil(3^{2n} / sum_{w<d} m(n, w)).
mpz_class average_ball_gv_bound(int n, int d);
/// ceil(C(n,w) 2^w / V(n, d-1, w)).
mpz_class constant_weight_gv_bound(int n, int w, int d);

enum class TableFormat { Text, Csv, Records };

void write_table(std::ostream& out, const BoundTable& table, TableFormat format);

}  // namespace ternary
