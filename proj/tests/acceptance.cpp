// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.  Each criterion also checks its runtime budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ternary/asymptotics.hpp"
#include "ternary/bounds.hpp"
#include "ternary/constructions.hpp"
#include "ternary/counting.hpp"
#include "ternary/search.hpp"

using namespace ternary;
namespace as = ternary::asymptotic;

namespace {

/// Collects failure messages; a criterion passes when none were recorded.
struct Checker {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string ref(int n, int d) { return "T(" + std::to_string(n) + "," + std::to_string(d) + ")"; }

mpz_class u(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

void even_zeros_exactness(Checker& c) {
  const auto table = build_table(5, 4);
  const long expected[] = {2, 5, 14, 41, 122};
  for (int n = 1; n <= 5; ++n) {
    const auto& e = table.at(n, 2);
    const mpz_class value = (power(3, static_cast<unsigned long>(n)) + 1) / 2;
    c.expect(value == expected[n - 1], "(3^n+1)/2 mismatch at n=" + std::to_string(n));
    c.expect(e.exact() && e.lower.value == value, ref(n, 2) + " not exact at " + value.get_str());
    c.expect(e.lower.source.family == Family::EvenZeros, ref(n, 2) + " lower from " + e.lower.source.to_string());
    const auto code = even_zeros_code(n);
    c.expect(u(code.size()) == value && min_distance(code).satisfies(2), "even-zeros witness wrong at n=" + std::to_string(n));
    const auto want = n == 1 ? Family::BaseCase : Family::Mix;
    c.expect(e.upper.source.family == want, ref(n, 2) + " upper from " + e.upper.source.to_string());
  }
}

void exact_search_agreement(Checker& c) {
  const auto table = build_table(3, 7);
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 2 * n; ++d) {
      const auto r = exact_T(n, d);
      c.expect(r.outcome.complete && r.outcome.exact(), ref(n, d) + " search incomplete");
      c.expect(min_distance(r.witness).satisfies(d) && static_cast<long long>(r.witness.size()) == r.outcome.lower,
               ref(n, d) + " witness invalid");
      const auto& e = table.at(n, d);
      const mpz_class v(static_cast<long>(r.outcome.lower));
      c.expect(e.lower.value <= v && v <= e.upper.value,
               ref(n, d) + " = " + v.get_str() + " outside [" + e.lower.value.get_str() + "," + e.upper.value.get_str() + "]");
    }
  }
  c.expect(exact_T(1, 1).outcome.lower == 3, "T(1,1) != 3");
  c.expect(exact_T(1, 2).outcome.lower == 2, "T(1,2) != 2");
  c.expect(exact_T(1, 3).outcome.lower == 1, "T(1,3) != 1");
  c.expect(exact_T(2, 2).outcome.lower == 5, "T(2,2) != 5");
}

void pair_counts(Checker& c) {
  for (int n = 1; n <= 4; ++n) {
    const auto poly = pair_count_poly(n);
    const auto census = pair_distance_census(n);
    c.expect(poly.counts.size() == static_cast<std::size_t>(2 * n + 1), "wrong coefficient count at n=" + std::to_string(n));
    for (int w = 0; w <= 2 * n; ++w) {
      c.expect(poly[w] == u(census[static_cast<std::size_t>(w)]),
               "m(" + std::to_string(n) + "," + std::to_string(w) + ") = " + poly[w].get_str() + " vs census " +
                   std::to_string(census[static_cast<std::size_t>(w)]));
    }
  }
}

void shell_spheres(Checker& c) {
  for (int n = 1; n <= 5; ++n) {
    const auto words = all_ternary_words(n);
    for (int w = 0; w <= n; ++w) {
      // Every centre of the shell, so the count is shown not to depend on it.
      for (const auto& centre : words) {
        if (centre.weight() != w) continue;
        const auto census = shell_distance_census(centre);
        for (int dist = 0; dist <= 2 * n; ++dist) {
          const auto s = constant_weight_sphere(n, w, dist);
          c.expect(s == u(census[static_cast<std::size_t>(dist)]),
                   "sphere(" + std::to_string(n) + "," + std::to_string(w) + "," + std::to_string(dist) + ") mismatch at " +
                       centre.to_string());
          if (dist % 2 == 1) c.expect(s == 0, "odd distance has nonzero sphere");
        }
      }
    }
  }
}

void plotkin(Checker& c) {
  for (int n = 1; n <= 3; ++n) {
    for (int d = n + 1; d <= 2 * n; ++d) {
      const auto r = exact_T(n, d);
      c.expect(r.outcome.complete, ref(n, d) + " incomplete");
      c.expect(mpz_class(static_cast<long>(r.outcome.lower)) <= plotkin_bound(n, d),
               ref(n, d) + " exceeds floor(d/(d-n)) = " + plotkin_bound(n, d).get_str());
    }
  }
  c.expect(exact_T(2, 2).outcome.lower == 5, "T(2,2) != 5");
  c.expect(plotkin_square_bound(2) == 6, "square bound at d=2 is " + plotkin_square_bound(2).get_str());
  c.expect(5 <= plotkin_square_bound(2), "T(2,2) above the square bound");

  std::mt19937_64 rng(2024);
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    const auto size = 1 + rng() % std::min<std::uint64_t>(total, 40);
    std::vector<bool> used(total, false);
    std::vector<TernaryWord> words;
    while (words.size() < size) {
      const auto i = rng() % total;
      if (used[i]) continue;
      used[i] = true;
      words.push_back(TernaryWord::from_index(n, i));
    }
    const TernaryCode code(n, words);
    const auto md = min_distance(code);
    const int d = md.is_unbounded() ? 1 : md.value();
    const auto report = plotkin_witness_check(code, d);
    c.expect(report.chain_holds() && report.identity_holds(), "pair-distance chain fails on random code " + std::to_string(t));
  }
}

void gv_soundness(Checker& c) {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 2 * n; ++d) {
      const auto r = exact_T(n, d);
      if (!r.outcome.complete) {
        c.expect(false, ref(n, d) + " incomplete");
        continue;
      }
      const mpz_class exact(static_cast<long>(r.outcome.lower));
      c.expect(average_ball_gv_bound(n, d) <= exact, "average-ball GV exceeds " + ref(n, d));
      for (int w = 0; w <= n; ++w) {
        c.expect(constant_weight_gv_bound(n, w, d) <= exact,
                 "constant-weight GV (w=" + std::to_string(w) + ") exceeds " + ref(n, d));
      }
    }
  }
}

void optimizers(Checker& c) {
  const auto checks = as::verify_optimizers();
  auto covered = [&](const std::string& family, double delta) {
    for (const auto& k : checks) {
      if (k.family == family && std::abs(k.delta - delta) < 1e-9) return k.pass;
    }
    return false;
  };
  auto named = [&](const std::string& family) {
    for (const auto& k : checks) {
      if (k.family == family) return k.pass;
    }
    return false;
  };
  for (int k = 1; k <= 5; ++k) c.expect(covered("coset-omega", 0.1 * k), "coset optimiser at delta=" + std::to_string(0.1 * k));
  for (double delta : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.85}) {
    c.expect(covered("ggv-omega-beta", delta), "ggv optimiser at delta=" + std::to_string(delta));
  }
  for (int k = 1; k <= 9; ++k) c.expect(covered("cw-omega", 0.1 * k), "cw optimiser at delta=" + std::to_string(0.1 * k));
  for (const auto& k : checks) {
    c.expect(k.pass, k.family + " at delta=" + std::to_string(k.delta) + ": closed " + std::to_string(k.closed_form) +
                         " vs numeric " + std::to_string(k.numeric));
  }
  c.expect(named("quartic-residual"), "quartic residual at 100 random delta");
  c.expect(named("cw-omega-side-condition"), "optimal omega violates delta < omega(2 - omega)");
  c.expect(std::abs(as::optimal_omega_cw(0.0) - 2.0 / 3.0) < 1e-9, "omega at delta=0");
  c.expect(std::abs(as::tau_lower_coset(0.0).omega - 2.0 / 3.0) < 1e-9, "coset omega at delta=0");
  c.expect(std::abs(as::tau_lower_ggv(0.0).omega - 2.0 / 3.0) < 1e-9, "ggv omega at delta=0");
  c.expect(std::abs(as::tau_lower_ggv(0.0).value - 1.0) < 1e-9, "ggv value at delta=0");
  c.expect(std::abs(as::tau_lower_cw(0.0, 2.0 / 3.0).value - 1.0) < 1e-9, "cw value at delta=0");
}

void crossover(Checker& c) {
  const double binary85 = as::tau_simple_bounds(0.85).lower_binary;
  const double ggv85 = as::tau_lower_ggv(0.85).value;
  c.expect(std::abs(binary85 - 0.0103) < 1e-3, "binary bound at 0.85 is " + std::to_string(binary85));
  c.expect(std::abs(ggv85 - 0.0012) < 1e-3, "ggv bound at 0.85 is " + std::to_string(ggv85));
  c.expect(binary85 > ggv85, "binary bound does not beat ggv at 0.85");
  c.expect(as::tau_simple_bounds(0.2).lower_binary < as::tau_lower_ggv(0.2).value, "ordering not reversed at 0.2");

  std::ostringstream csv;
  as::write_curve_csv(csv, as::curve_export(as::DeltaGrid{0.01, 0.99, 0.01}), as::curve_families());
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::istringstream fields(line);
    std::string f;
    while (std::getline(fields, f, ',')) {
      char* end = nullptr;
      const double v = std::strtod(f.c_str(), &end);
      if (end == f.c_str()) continue;  // optimizer label
      c.expect(std::isfinite(v) && v >= 0.0, "bad curve entry '" + f + "' in row " + std::to_string(rows));
    }
  }
  c.expect(rows == 99, "curve has " + std::to_string(rows) + " rows");
}

void constructions(Checker& c) {
  for (int n = 1; n <= 6; ++n) {
    c.expect(verify_construction("even-zeros", even_zeros_code(n), 2).distance_ok, "even-zeros n=" + std::to_string(n));
    for (int d = 1; d <= 2 * n; ++d) {
      const std::string at = " n=" + std::to_string(n) + " d=" + std::to_string(d);
      c.expect(verify_construction("greedy", greedy_gv_code(n, d), d).distance_ok, "greedy" + at);
      c.expect(verify_construction("greedy-random", greedy_gv_code(n, d, GreedyOrder::Random, 1), d).distance_ok,
               "greedy-random" + at);
      c.expect(verify_construction("signed-binary", signed_binary_code(binary_lexicode(n, (d + 1) / 2)), d).distance_ok,
               "signed-binary" + at);
      c.expect(verify_construction("phi-shift",
                                   phi_shift_construction(binary_lexicode(2 * n, d), PhiShiftStrategy::exhaustive()), d)
                   .distance_ok,
               "phi-shift" + at);
      const auto outer = binary_lexicode(n, d);
      const auto inner = lexicode_inner_codes(n, d);
      c.expect(verify_construction("support", support_construction(outer, inner, d), d).distance_ok, "support" + at);
      c.expect(verify_construction("coset-scan", coset_scan_construction(outer, inner, d), d).distance_ok, "coset-scan" + at);
    }
  }

  const BinaryCode repetition(3, {BinaryWord{0, 0, 0}, BinaryWord{1, 1, 1}});
  const auto example = support_construction(repetition, lexicode_inner_codes(3, 3), 3);
  c.expect(min_distance(example).satisfies(3), "support example has min d1 " + min_distance(example).to_string());

  std::mt19937_64 rng(99);
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const std::uint64_t space = std::uint64_t{1} << (2 * n);
    const auto size = 1 + rng() % space;
    std::vector<bool> used(space, false);
    std::vector<BinaryWord> words;
    while (words.size() < size) {
      const auto x = rng() % space;
      if (used[x]) continue;
      used[x] = true;
      words.emplace_back(2 * n, x);
    }
    const BinaryCode b(2 * n, words);
    const auto code = phi_shift_construction(b, PhiShiftStrategy::exhaustive());
    const auto four = power(4, static_cast<unsigned long>(n));
    const mpz_class guarantee = (u(b.size()) * power(3, static_cast<unsigned long>(n)) + four - 1) / four;
    c.expect(u(code.size()) >= guarantee, "phi-shift size " + std::to_string(code.size()) + " below " + guarantee.get_str());
    const auto bd = min_distance(b);
    c.expect(bd.is_unbounded() || min_distance(code).satisfies(bd.value()), "phi-shift lost distance");
  }
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<void(Checker&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "T(n,2) exact from even-zeros and the mix recursion, n=1..5", 5, even_zeros_exactness},
      {2, "exact search agrees with the table for n<=3", 30, exact_search_agreement},
      {3, "pair counts equal the ordered-pair census for n<=4", 10, pair_counts},
      {4, "constant-weight spheres equal the shell census for n<=5", 30, shell_spheres},
      {5, "Plotkin bounds and the pair-distance chain", 60, plotkin},
      {6, "GV lower bounds never exceed exact values for n<=3", 60, gv_soundness},
      {7, "closed-form optimisers match numeric suprema", 20, optimizers},
      {8, "binary/GGV crossover and clean curve export", 60, crossover},
      {9, "constructions meet their claimed distances", 60, constructions},
  };
  int failed = 0;
  for (const auto& k : criteria) {
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
      k.body(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > k.budget_seconds) c.failures.push_back("took " + std::to_string(secs) + " s, budget " + std::to_string(k.budget_seconds));
    const bool ok = c.failures.empty();
    failed += !ok;
    std::printf("%s criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", k.id, k.title, secs);
    for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) std::printf("    %s\n", c.failures[i].c_str());
    if (c.failures.size() > 10) std::printf("    ... %zu more\n", c.failures.size() - 10);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
