#include "ternary/bounds.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "ternary/constructions.hpp"
#include "ternary/counting.hpp"
#include "ternary/hamming_table_data.hpp"

namespace ternary {

namespace {

mpz_class big(long long v) { return mpz_class(static_cast<long>(v)); }

int ceil_half(int d) { return (d + 1) / 2; }

mpz_class pow3(int n) { return power(3, static_cast<unsigned long>(n)); }

mpz_class ceil_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::string describe(const HammingBoundEntry& e, bool upper) {
  std::ostringstream os;
  os << "A" << e.q << "(" << e.n << "," << e.d << ")" << (upper ? "<=" : ">=") << (upper ? e.upper : e.lower).get_str()
     << ":" << (upper ? e.upper_source : e.lower_source);
  return os.str();
}

Provenance make(Family f, std::vector<long> params = {}, std::string note = {}) {
  return Provenance{f, std::move(params), std::move(note)};
}

std::string ref(long n, long d) { return "T(" + std::to_string(n) + "," + std::to_string(d) + ")"; }

/// Support-construction estimate sum_w A_w A2(w, ceil(d/2)) over the binary
/// lexicode of length n and distance d.
mpz_class support_construction_bound(int n, int d, HammingBounds& hamming) {
  const auto outer = weight_distribution(binary_lexicode(n, d));
  mpz_class total = 0;
  for (int w = 0; w <= n; ++w) {
    const auto count = outer[w];
    if (count == 0) continue;
    total += mpz_class(static_cast<long>(count)) * hamming.get(2, w, ceil_half(d)).lower;
  }
  return total;
}

mpz_class coset_average_bound(int n, int d, HammingBounds& hamming) {
  mpz_class inner_sum = 0;
  for (int w = 0; w <= n; ++w) inner_sum += binomial(n, w) * hamming.get(2, w, ceil_half(d)).lower;
  return ceil_div(hamming.get(2, n, d).lower * inner_sum, power(2, static_cast<unsigned long>(n)));
}

/// Evaluates one lower-bound family at (n, d); nullopt when it does not apply.
std::optional<Bound> lower_family(Family f, int n, int d, const std::vector<long>& params, HammingBounds& hamming,
                                  const TableOptions& options) {
  switch (f) {
    case Family::Trivial:
      return Bound{1, make(f)};
    case Family::EvenZeros:
      if (d != 2) return std::nullopt;
      return Bound{(pow3(n) + 1) / 2, make(f)};
    case Family::TernaryHammingLower: {
      const auto& a = hamming.get(3, n, d);
      return Bound{a.lower, make(f, {}, describe(a, false))};
    }
    case Family::SignedBinary: {
      const auto& a = hamming.get(2, n, ceil_half(d));
      return Bound{a.lower, make(f, {}, describe(a, false))};
    }
    case Family::PhiShift: {
      if (2 * n > kMaxBinaryLength) return std::nullopt;
      const auto& a = hamming.get(2, 2 * n, d);
      return Bound{ceil_div(a.lower * pow3(n), power(4, static_cast<unsigned long>(n))), make(f, {}, describe(a, false))};
    }
    case Family::SupportConstruction:
      if (n > options.support_max_length) return std::nullopt;
      return Bound{support_construction_bound(n, d, hamming), make(f, {}, "outer=lexicode")};
    case Family::CosetAverage:
      return Bound{coset_average_bound(n, d, hamming), make(f)};
    case Family::AverageBallGv:
      return Bound{average_ball_gv_bound(n, d), make(f)};
    case Family::ConstantWeightGv: {
      if (!params.empty()) {
        const int w = static_cast<int>(params.front());
        return Bound{constant_weight_gv_bound(n, w, d), make(f, {w})};
      }
      std::optional<Bound> best;
      for (int w = 1; w <= n; ++w) {
        auto v = constant_weight_gv_bound(n, w, d);
        if (!best || v > best->value) best = Bound{v, make(f, {w})};
      }
      return best;
    }
    default:
      return std::nullopt;
  }
}

std::optional<Bound> upper_family(Family f, const BoundTable& t, int n, int d, HammingBounds& hamming) {
  switch (f) {
    case Family::Puncture:
      if (n < 2 || d < 1) return std::nullopt;
      return Bound{3 * t.upper_value(n - 1, d), make(f, {n - 1, d})};
    case Family::Mix:
      if (n < 2 || d < 2) return std::nullopt;
      return Bound{t.upper_value(n - 1, d) + t.upper_value(n - 1, d - 1), make(f, {n - 1, d, n - 1, d - 1})};
    case Family::Shorten:
      if (n < 2 || d < 3) return std::nullopt;
      return Bound{t.upper_value(n - 1, d - 2), make(f, {n - 1, d - 2})};
    case Family::Plotkin:
      if (d <= n) return std::nullopt;
      return Bound{plotkin_bound(n, d), make(f)};
    case Family::PlotkinSquare:
      if (d != n) return std::nullopt;
      return Bound{plotkin_square_bound(d), make(f)};
    case Family::TernaryHammingUpper: {
      const auto& a = hamming.get(3, n, ceil_half(d));
      return Bound{a.upper, make(f, {}, describe(a, true))};
    }
    case Family::PhiEmbeddingUpper: {
      if (2 * n > kMaxBinaryLength) return std::nullopt;
      const auto& a = hamming.get(2, 2 * n, d);
      return Bound{a.upper, make(f, {}, describe(a, true))};
    }
    default:
      return std::nullopt;
  }
}

constexpr Family kLowerFamilies[] = {Family::EvenZeros,     Family::TernaryHammingLower, Family::SignedBinary,
                                     Family::PhiShift,      Family::SupportConstruction, Family::CosetAverage,
                                     Family::AverageBallGv, Family::ConstantWeightGv};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Trivial: return "trivial";
    case Family::WholeSpace: return "whole-space";
    case Family::BaseCase: return "base-case";
    case Family::BeyondDiameter: return "beyond-diameter";
    case Family::Puncture: return "puncture";
    case Family::Mix: return "mix";
    case Family::Shorten: return "shorten";
    case Family::Plotkin: return "plotkin";
    case Family::PlotkinSquare: return "plotkin-square";
    case Family::TernaryHammingUpper: return "ternary-hamming-upper";
    case Family::PhiEmbeddingUpper: return "phi-embedding-upper";
    case Family::TernaryHammingLower: return "ternary-hamming-lower";
    case Family::SignedBinary: return "signed-binary";
    case Family::PhiShift: return "phi-shift";
    case Family::SupportConstruction: return "support-construction";
    case Family::CosetAverage: return "coset-average";
    case Family::AverageBallGv: return "average-ball-gv";
    case Family::ConstantWeightGv: return "constant-weight-gv";
    case Family::EvenZeros: return "even-zeros";
    case Family::Search: return "search";
    case Family::MonotoneDistance: return "monotone-d";
    case Family::MonotoneLength: return "monotone-n";
  }
  return "unknown";
}

std::string Provenance::to_string() const {
  std::string s(family_name(family));
  switch (family) {
    case Family::Puncture: s += "[3*" + ref(params[0], params[1]) + "]"; break;
    case Family::Mix: s += "[" + ref(params[0], params[1]) + "+" + ref(params[2], params[3]) + "]"; break;
    case Family::Shorten:
    case Family::MonotoneDistance:
    case Family::MonotoneLength: s += "[" + ref(params[0], params[1]) + "]"; break;
    case Family::ConstantWeightGv: s += "[w=" + std::to_string(params[0]) + "]"; break;
    default: break;
  }
  if (!note.empty()) s += "(" + note + ")";
  return s;
}

// ---------------------------------------------------------------- Hamming

std::vector<HammingBoundEntry> parse_hamming_table(std::string_view text) {
  std::vector<HammingBoundEntry> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    HammingBoundEntry e;
    std::string lower, upper;
    if (!(fields >> e.q >> e.n >> e.d >> lower >> upper >> e.lower_source)) {
      throw std::invalid_argument("malformed Hamming table row " + std::to_string(line_no) + ": " + line);
    }
    e.lower = mpz_class(lower);
    e.upper = mpz_class(upper);
    e.lower_source = "table:" + e.lower_source;
    e.upper_source = e.lower_source;
    if (e.lower > e.upper) throw std::invalid_argument("Hamming table row " + std::to_string(line_no) + " has lower > upper");
    rows.push_back(std::move(e));
  }
  return rows;
}

const std::vector<HammingBoundEntry>& bundled_hamming_table() {
  static const auto rows = parse_hamming_table(detail::kHammingTableText);
  return rows;
}

HammingBounds::HammingBounds() : HammingBounds(Options{}) {}

HammingBounds::HammingBounds(Options options) : options_(options) {
  for (const auto& row : bundled_hamming_table()) bundled_.emplace(std::make_tuple(row.q, row.n, row.d), row);
}

const HammingBoundEntry& HammingBounds::get(int q, int n, int d) {
  const auto key = std::make_tuple(q, n, d);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, compute(q, n, d)).first;
  return it->second;
}

HammingBoundEntry HammingBounds::compute(int q, int n, int d) const {
  HammingBoundEntry e{q, n, d, 0, 0, {}, {}};
  auto exact = [&](const mpz_class& v, const std::string& why) {
    e.lower = e.upper = v;
    e.lower_source = e.upper_source = why;
    return e;
  };
  if (n == 0) return exact(1, "empty-length");
  if (d <= 1) return exact(power(q, static_cast<unsigned long>(n)), "whole-space");
  if (d > n) return exact(1, "beyond-length");
  if (d == n) return exact(q, "repetition");
  if (d == 2) return exact(power(q, static_cast<unsigned long>(n - 1)), "parity");

  e.lower = ceil_div(power(q, static_cast<unsigned long>(n)), hamming_ball_volume(q, n, d - 1));
  e.lower_source = "gv";
  e.upper = power(q, static_cast<unsigned long>(n - d + 1));
  e.upper_source = "singleton";

  if (auto it = bundled_.find(std::make_tuple(q, n, d)); it != bundled_.end()) {
    if (it->second.lower > e.lower) {
      e.lower = it->second.lower;
      e.lower_source = it->second.lower_source;
    }
    if (it->second.upper < e.upper) {
      e.upper = it->second.upper;
      e.upper_source = it->second.upper_source;
    }
  }
  if (options_.use_search && e.lower < e.upper) {
    const mpz_class space = power(q, static_cast<unsigned long>(n));
    if (space <= mpz_class(static_cast<unsigned long>(options_.search_vertex_limit))) {
      const auto r = exact_A(q, n, d,
                             SearchOptions{options_.search_budget, options_.search_vertex_limit, Execution::Parallel});
      const std::string tag = r.outcome.complete ? "search" : "search-incomplete";
      if (big(r.outcome.lower) > e.lower) {
        e.lower = big(r.outcome.lower);
        e.lower_source = tag;
      }
      if (big(r.outcome.upper) < e.upper) {
        e.upper = big(r.outcome.upper);
        e.upper_source = tag;
      }
    }
  }
  return e;
}

// ------------------------------------------------------------- BoundTable

BoundTable::BoundTable(int n_max, int d_max) : n_max_(n_max), d_max_(d_max) {
  if (n_max < 1 || d_max < 1) throw std::invalid_argument("bound table needs n_max >= 1 and d_max >= 1");
  if (n_max > kMaxTernaryLength) throw std::invalid_argument("n_max above " + std::to_string(kMaxTernaryLength));
  entries_.reserve(static_cast<std::size_t>(n_max) * static_cast<std::size_t>(d_max));
  for (int n = 1; n <= n_max; ++n) {
    for (int d = 1; d <= d_max; ++d) {
      entries_.push_back(BoundEntry{n, d, Bound{1, make(Family::Trivial)}, Bound{pow3(n), make(Family::WholeSpace)}});
    }
  }
}

BoundEntry& BoundTable::at(int n, int d) {
  if (!contains(n, d)) throw std::out_of_range("no table entry for " + ref(n, d));
  return entries_[static_cast<std::size_t>((n - 1) * d_max_ + (d - 1))];
}

const BoundEntry& BoundTable::at(int n, int d) const { return const_cast<BoundTable&>(*this).at(n, d); }

mpz_class BoundTable::lower_value(int n, int d) const {
  if (d <= 0) return pow3(n);
  if (d > 2 * n) return 1;
  return at(n, d).lower.value;
}

mpz_class BoundTable::upper_value(int n, int d) const {
  if (d <= 0) return pow3(n);
  if (d > 2 * n) return 1;
  return at(n, d).upper.value;
}

bool BoundTable::raise_lower(int n, int d, const mpz_class& value, const Provenance& source) {
  auto& e = at(n, d);
  if (value <= e.lower.value) return false;
  e.lower = Bound{value, source};
  return true;
}

bool BoundTable::lower_upper(int n, int d, const mpz_class& value, const Provenance& source) {
  auto& e = at(n, d);
  if (value >= e.upper.value) return false;
  e.upper = Bound{value, source};
  return true;
}

// ----------------------------------------------------------- bound values

mpz_class plotkin_bound(int n, int d) {
  if (d <= n) throw std::invalid_argument("plotkin_bound needs d > n");
  return floor_div(d, d - n);
}

mpz_class plotkin_square_bound(int d) {
  // M <= 2d + 1/2 + sqrt(2d + 1/4)  <=>  2M - 4d - 1 <= sqrt(8d + 1)
  mpz_class root;
  mpz_class radicand = 8 * mpz_class(d) + 1;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  return floor_div(root + 4 * mpz_class(d) + 1, 2);
}

mpz_class average_ball_gv_bound(int n, int d) {
  const auto m = pair_count_poly(n);
  mpz_class denominator = 0;
  for (int w = 0; w <= std::min(d - 1, 2 * n); ++w) denominator += m[w];
  if (denominator == 0) return pow3(n);
  return ceil_div(power(9, static_cast<unsigned long>(n)), denominator);
}

mpz_class constant_weight_gv_bound(int n, int w, int d) {
  return ceil_div(shell_size(n, w), constant_weight_ball(n, w, std::max(d - 1, 0)));
}

// ----------------------------------------------------------- propagation

void seed_table(BoundTable& table) {
  for (int n = 1; n <= table.n_max(); ++n) {
    for (int d = 1; d <= table.d_max(); ++d) {
      if (d > 2 * n) {
        table.lower_upper(n, d, 1, make(Family::BeyondDiameter));
      } else if (n == 1) {
        // The lower bound at d = 2 is left to the even-zeros code.
        const mpz_class v = d == 1 ? 3 : 2;
        if (d == 1) table.raise_lower(n, d, v, make(Family::BaseCase));
        table.lower_upper(n, d, v, make(Family::BaseCase));
      } else if (d == 1) {
        table.raise_lower(n, d, pow3(n), make(Family::WholeSpace));
      }
    }
  }
}

bool upper_recursions(BoundTable& table) {
  bool changed = false;
  HammingBounds unused(HammingBounds::Options{.use_search = false});
  for (int n = 2; n <= table.n_max(); ++n) {
    for (int d = 1; d <= table.d_max(); ++d) {
      for (Family f : {Family::Puncture, Family::Mix, Family::Shorten}) {
        if (auto b = upper_family(f, table, n, d, unused)) changed |= table.lower_upper(n, d, b->value, b->source);
      }
    }
  }
  return changed;
}

bool upper_hamming_bridge(BoundTable& table, HammingBounds& hamming) {
  bool changed = false;
  for (int n = 1; n <= table.n_max(); ++n) {
    for (int d = 1; d <= table.d_max(); ++d) {
      for (Family f : {Family::TernaryHammingUpper, Family::PhiEmbeddingUpper}) {
        if (auto b = upper_family(f, table, n, d, hamming)) changed |= table.lower_upper(n, d, b->value, b->source);
      }
    }
  }
  return changed;
}

bool upper_plotkin(BoundTable& table) {
  bool changed = false;
  HammingBounds unused(HammingBounds::Options{.use_search = false});
  for (int n = 1; n <= table.n_max(); ++n) {
    for (int d = 1; d <= table.d_max(); ++d) {
      for (Family f : {Family::Plotkin, Family::PlotkinSquare}) {
        if (auto b = upper_family(f, table, n, d, unused)) changed |= table.lower_upper(n, d, b->value, b->source);
      }
    }
  }
  return changed;
}

bool lower_all(BoundTable& table, HammingBounds& hamming, const TableOptions& options) {
  bool changed = false;
  for (int n = 1; n <= table.n_max(); ++n) {
    for (int d = 2; d <= std::min(table.d_max(), 2 * n); ++d) {
      for (Family f : kLowerFamilies) {
        if (auto b = lower_family(f, n, d, {}, hamming, options)) changed |= table.raise_lower(n, d, b->value, b->source);
      }
    }
  }
  return changed;
}

bool apply_search(BoundTable& table, const SearchOptions& options) {
  bool changed = false;
  for (int n = 1; n <= table.n_max(); ++n) {
    if (pow3(n) > mpz_class(static_cast<unsigned long>(options.vertex_limit))) break;
    for (int d = 2; d <= std::min(table.d_max(), 2 * n); ++d) {
      const auto r = exact_T(n, d, options);
      const std::string note = r.outcome.complete ? "complete" : "search-incomplete";
      changed |= table.raise_lower(n, d, big(r.outcome.lower), make(Family::Search, {}, note));
      changed |= table.lower_upper(n, d, big(r.outcome.upper), make(Family::Search, {}, note));
    }
  }
  return changed;
}

bool monotone_closure(BoundTable& table) {
  bool any = false;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int n = 1; n <= table.n_max(); ++n) {
      for (int d = table.d_max(); d >= 1; --d) {
        if (d + 1 <= table.d_max()) {
          changed |= table.raise_lower(n, d, table.at(n, d + 1).lower.value, make(Family::MonotoneDistance, {n, d + 1}));
        }
        if (n > 1) {
          changed |= table.raise_lower(n, d, table.at(n - 1, d).lower.value, make(Family::MonotoneLength, {n - 1, d}));
        }
      }
    }
    for (int n = table.n_max(); n >= 1; --n) {
      for (int d = 1; d <= table.d_max(); ++d) {
        if (d > 1) {
          changed |= table.lower_upper(n, d, table.at(n, d - 1).upper.value, make(Family::MonotoneDistance, {n, d - 1}));
        }
        if (n < table.n_max()) {
          changed |= table.lower_upper(n, d, table.at(n + 1, d).upper.value, make(Family::MonotoneLength, {n + 1, d}));
        }
      }
    }
    any |= changed;
  }
  return any;
}

void check_consistency(const BoundTable& table) {
  for (const auto& e : table.entries()) {
    if (e.lower.value > e.upper.value) {
      throw InconsistentBounds("inconsistent bounds for " + ref(e.n, e.d) + ": lower " + e.lower.value.get_str() +
                               " from " + e.lower.source.to_string() + " exceeds upper " + e.upper.value.get_str() +
                               " from " + e.upper.source.to_string());
    }
  }
}

BoundTable build_table(int n_max, int d_max, const TableOptions& options) {
  HammingBounds hamming(options.hamming);
  return build_table(n_max, d_max, hamming, options);
}

BoundTable build_table(int n_max, int d_max, HammingBounds& hamming, const TableOptions& options) {
  BoundTable table(n_max, d_max);
  seed_table(table);
  lower_all(table, hamming, options);
  upper_plotkin(table);
  upper_hamming_bridge(table, hamming);
  if (options.use_search) apply_search(table, options.search);
  while (true) {
    const bool a = upper_recursions(table);
    const bool b = monotone_closure(table);
    if (!a && !b) break;
  }
  check_consistency(table);
  return table;
}

mpz_class replay(const BoundTable& table, HammingBounds& hamming, int n, int d, const Provenance& source, Side side,
                 const TableOptions& options) {
  const auto& p = source.params;
  const bool upper = side == Side::Upper;
  switch (source.family) {
    case Family::Trivial:
    case Family::BeyondDiameter:
      return 1;
    case Family::WholeSpace:
      return pow3(n);
    case Family::BaseCase:
      return d == 1 ? 3 : (d == 2 ? 2 : 1);
    case Family::MonotoneDistance:
    case Family::MonotoneLength: {
      const auto& e = table.at(static_cast<int>(p[0]), static_cast<int>(p[1]));
      return upper ? e.upper.value : e.lower.value;
    }
    case Family::Search: {
      const auto r = exact_T(n, d, options.search);
      return upper ? big(r.outcome.upper) : big(r.outcome.lower);
    }
    default:
      break;
  }
  if (upper) {
    if (auto b = upper_family(source.family, table, n, d, hamming)) return b->value;
  } else if (auto b = lower_family(source.family, n, d, p, hamming, options)) {
    return b->value;
  }
  throw std::invalid_argument("cannot replay provenance " + source.to_string());
}

void write_table(std::ostream& out, const BoundTable& table, TableFormat format) {
  switch (format) {
    case TableFormat::Csv:
      out << "n,d,lower,upper,exact,lower_provenance,upper_provenance\n";
      for (const auto& e : table.entries()) {
        out << e.n << ',' << e.d << ',' << e.lower.value.get_str() << ',' << e.upper.value.get_str() << ','
            << (e.exact() ? "yes" : "no") << ',' << csv_field(e.lower.source.to_string()) << ','
            << csv_field(e.upper.source.to_string()) << '\n';
      }
      break;
    case TableFormat::Records:
      for (const auto& e : table.entries()) {
        nlohmann::ordered_json j;
        j["n"] = e.n;
        j["d"] = e.d;
        j["lower"] = e.lower.value.get_str();
        j["upper"] = e.upper.value.get_str();
        j["exact"] = e.exact();
        j["lower_provenance"] = e.lower.source.to_string();
        j["upper_provenance"] = e.upper.source.to_string();
        out << j.dump() << '\n';
      }
      break;
    case TableFormat::Text: {
      // One block per n: d, bounds, and provenance.
      std::size_t width = 5;
      for (const auto& e : table.entries()) width = std::max({width, e.lower.value.get_str().size(), e.upper.value.get_str().size()});
      out << std::left << std::setw(4) << "n" << std::setw(4) << "d" << std::right << std::setw(static_cast<int>(width))
          << "lower" << "  " << std::setw(static_cast<int>(width)) << "upper" << "  " << "source\n";
      for (const auto& e : table.entries()) {
        out << std::left << std::setw(4) << e.n << std::setw(4) << e.d << std::right
            << std::setw(static_cast<int>(width)) << e.lower.value.get_str() << "  " << std::setw(static_cast<int>(width))
            << e.upper.value.get_str() << "  "
            << (e.exact() ? "exact  " : "       ") << e.lower.source.to_string() << " / " << e.upper.source.to_string()
            << '\n';
      }
      break;
    }
  }
}

}  // namespace ternary
