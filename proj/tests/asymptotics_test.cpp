#include <doctest.h>

#include <gmpxx.h>

#include <cmath>
#include <random>
#include <sstream>

#include "ternary/asymptotics.hpp"

using namespace ternary::asymptotic;
using ternary::Execution;

namespace {

// Reference values from an independent Python evaluation of the same
// objectives (closed forms cross-checked on dense grids).
struct Golden {
  double delta, binary, ggv, cw_opt, cw_fixed;
};
const Golden kGolden[] = {
    {0.05, 0.52452, 0.80535, 0.80562, 0.80547},
    {0.2, 0.33503, 0.47766, 0.48148, 0.47911},
    {0.3, 0.24616, 0.33159, 0.33927, 0.33406},
    {0.5, 0.11907, 0.13504, 0.15063, 0.13824},
    {0.85, 0.0102789, 0.00127143, 0.0110645, 0.00138363},
};

}  // namespace

TEST_CASE("entropy and GV rate") {
  CHECK(entropy(2, 0.5) == doctest::Approx(1.0));
  CHECK(entropy(3, 2.0 / 3.0) == doctest::Approx(1.0));
  CHECK(entropy(2, 0.0) == 0.0);
  CHECK(entropy(2, 1.0) == 0.0);
  CHECK_THROWS_AS(entropy(2, -0.1), std::domain_error);
  CHECK_THROWS_AS(entropy(2, 1.1), std::domain_error);
  CHECK(alpha_gv(2, 0.0) == 1.0);
  CHECK(alpha_gv(2, 0.5) == 0.0);
  CHECK(alpha_gv(3, 2.0 / 3.0) == 0.0);
  CHECK(log3_2() == doctest::Approx(0.6309297535714574));
}

TEST_CASE("simple bounds") {
  const auto zero = tau_simple_bounds(0.0);
  CHECK(zero.lower_binary == doctest::Approx(log3_2()));
  const auto b = tau_simple_bounds(0.85);
  CHECK(std::abs(b.lower_binary - log3_2() * (1.0 - entropy(2, 0.425))) < 1e-12);
  CHECK(std::abs(b.lower_binary - 0.0103) < 1e-3);
  CHECK(tau_simple_bounds(1.0).lower_binary == 0.0);
  CHECK(tau_simple_bounds(1.5).lower_binary == 0.0);
  CHECK(b.upper_binary == doctest::Approx(2.0 * log3_2()));
}

TEST_CASE("curves match golden values") {
  for (const auto& g : kGolden) {
    CAPTURE(g.delta);
    const auto p = evaluate_point(g.delta);
    CHECK(std::abs(p.simple.lower_binary - g.binary) < 1e-5);
    CHECK(std::abs(p.ggv.value - g.ggv) < 1e-5);
    CHECK(std::abs(p.cw.value - g.cw_opt) < 1e-5);
    CHECK(std::abs(p.cw_fixed.value - g.cw_fixed) < 1e-5);
  }
  CHECK(std::abs(tau_lower_cw(0.3, 2.0 / 3.0).value - 0.33405521646) < 1e-9);
  CHECK(std::abs(tau_lower_cw(0.3, 2.0 / 3.0).gamma - 0.117804797) < 1e-8);
  // The reference came from a 2-D grid, accurate to about 1e-9.
  CHECK(std::abs(tau_lower_ggv(0.85).value - 0.00127143523) < 1e-8);
}

TEST_CASE("coset bound optimisers") {
  const auto a = tau_lower_coset(0.25);
  CHECK(a.source == OptimizerSource::ClosedForm);
  CHECK(std::abs(a.omega - (2.25 + std::sqrt(2.0625)) / 6.0) < 1e-15);
  CHECK(std::abs(a.omega - 0.6143567769) < 1e-9);
  CHECK(std::abs(a.value - 0.200170912) < 1e-8);
  CHECK(tau_lower_coset(0.5).source == OptimizerSource::Boundary);
  const auto b = tau_lower_coset(0.6);
  CHECK(b.source == OptimizerSource::Numeric);
  CHECK(b.raw < 0.0);
  CHECK(b.value == 0.0);
  CHECK(b.omega == doctest::Approx(0.6).epsilon(1e-6));
  // Numeric search agrees with a fine grid.
  const auto grid = grid_max([](double w) { return coset_objective(0.6, w); }, 0.6, 1.0, 100001);
  CHECK(std::abs(log3_2() * (-1.0 + alpha_gv(2, 0.6) + grid.value) - b.raw) < 1e-9);
  CHECK(tau_lower_coset(1.0).source == OptimizerSource::Trivial);
  CHECK(tau_lower_coset(1.0).value == 0.0);
}

TEST_CASE("pluggable alpha_2 reproduces the GV-instantiated coset bound") {
  const auto gv = [](double x) { return alpha_gv(2, x); };
  for (double delta : {0.05, 0.1, 0.2, 0.3, 0.4, 0.45, 0.6, 0.7}) {
    CHECK(std::abs(tau_lower_coset_with(delta, gv).raw - tau_lower_coset(delta).raw) < 1e-9);
  }
  // A weaker alpha_2 can only lower the bound.
  const auto half = [](double x) { return 0.5 * alpha_gv(2, x); };
  CHECK(tau_lower_coset_with(0.2, half).raw <= tau_lower_coset(0.2).raw);
}

TEST_CASE("generalized GV limits") {
  const auto zero = tau_lower_ggv(0.0);
  CHECK(std::abs(zero.omega - 2.0 / 3.0) < 1e-12);
  CHECK(std::abs(zero.value - 1.0) < 1e-9);
  const auto cut = tau_lower_ggv(8.0 / 9.0);
  CHECK(cut.value == 0.0);
  CHECK(cut.omega == 8.0 / 9.0);
  CHECK(cut.beta == 8.0 / 9.0);
  CHECK(std::abs(cut.raw) < 1e-12);  // the closed form reaches zero exactly at 8/9
}

TEST_CASE("constant-weight bound") {
  CHECK(tau_lower_cw(0.9, 0.5).value == 0.0);
  CHECK(tau_lower_cw(0.9, 0.5).source == OptimizerSource::Trivial);
  CHECK(std::abs(tau_lower_cw(0.0, 2.0 / 3.0).value - 1.0) < 1e-9);
  CHECK_THROWS_AS(tau_lower_cw(0.3, 0.0), std::domain_error);
  CHECK_THROWS_AS(tau_lower_cw(0.3, 1.0), std::domain_error);
  CHECK(optimal_omega_cw(0.0) == doctest::Approx(2.0 / 3.0));
  CHECK(optimal_omega_cw(1.0) == doctest::Approx(1.0));
  CHECK(std::abs(optimal_omega_cw(0.5) - (1.5 + std::sqrt(0.75)) / 3.0) < 1e-15);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (double delta : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double best = tau_lower_cw_optimized(delta).value;
    for (int i = 0; i < 100; ++i) {
      const double w = 1e-6 + (1.0 - 2e-6) * unit(rng);
      CHECK(best >= tau_lower_cw(delta, w).value - 1e-12);
    }
  }
}

TEST_CASE("quartic roots") {
  const auto r0 = quartic_roots(0.0);
  CHECK(r0[0] == 0.0);
  CHECK(r0[1] == 2.0);
  CHECK(r0[2] == 0.0);
  CHECK(r0[3] == doctest::Approx(2.0 / 3.0));
  const auto r1 = quartic_roots(1.0);
  CHECK(r1[0] == 1.0);
  CHECK(r1[1] == 1.0);
  CHECK(r1[2] == doctest::Approx(1.0 / 3.0));
  CHECK(r1[3] == doctest::Approx(1.0));
  std::mt19937_64 rng(0);
  for (int i = 0; i < 100; ++i) {
    const double delta = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    for (double w : quartic_roots(delta)) CHECK(std::abs(quartic(delta, w)) < 1e-12);
  }
}

TEST_CASE("quartic factorisation is an exact identity") {
  // (w^2 - 2w + d)(3w^2 - 2(d+1)w + d), expanded with rational d.
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    const mpq_class d(static_cast<long>(rng() % 1000), 997);
    // Coefficients of w^4 .. w^0.
    const mpq_class a[3] = {1, -2, d};
    const mpq_class b[3] = {3, -2 * (d + 1), d};
    mpq_class prod[5];
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) prod[i + j] += a[i] * b[j];
    }
    CHECK(prod[0] == 3);
    CHECK(prod[1] == -2 * (4 + d));
    CHECK(prod[2] == 4 * (1 + 2 * d));
    CHECK(prod[3] == -2 * d * (2 + d));
    CHECK(prod[4] == d * d);
  }
}

TEST_CASE("closed forms agree with numeric suprema") {
  for (const auto& c : verify_optimizers()) {
    CAPTURE(c.family);
    CAPTURE(c.delta);
    CHECK(c.pass);
  }
}

TEST_CASE("binary bound overtakes generalized GV at large distance") {
  CHECK(tau_simple_bounds(0.85).lower_binary > tau_lower_ggv(0.85).value);
  CHECK(tau_simple_bounds(0.2).lower_binary < tau_lower_ggv(0.2).value);
}

TEST_CASE("curve invariants on the default grid") {
  const auto rows = curve_export(DeltaGrid{});
  CHECK(rows.size() == 99);
  for (const auto& p : rows) {
    CAPTURE(p.delta);
    for (double v : {p.simple.lower_a3, p.simple.lower_binary, p.simple.lower_double, p.coset.value, p.ggv.value,
                     p.cw.value, p.cw_fixed.value}) {
      CHECK(std::isfinite(v));
      CHECK(v >= 0.0);
      CHECK(v <= 1.0 + 1e-12);
      CHECK(v <= p.simple.upper_a3_half);
    }
    if (p.delta < 8.0 / 9.0) CHECK(p.cw.value >= p.ggv.value - 1e-9);
  }
}

TEST_CASE("curve export is identical serial and parallel") {
  const DeltaGrid grid{0.01, 0.99, 0.01};
  std::ostringstream a;
  std::ostringstream b;
  write_curve_csv(a, curve_export(grid, Execution::Serial), curve_families());
  write_curve_csv(b, curve_export(grid, Execution::Parallel), curve_families());
  CHECK(a.str() == b.str());
  CHECK(a.str().find("nan") == std::string::npos);
  CHECK(a.str().find(",-") == std::string::npos);
}

TEST_CASE("grid and family validation") {
  CHECK_THROWS_AS(DeltaGrid({0.1, 0.5, 0.0}).points(), std::invalid_argument);
  CHECK_THROWS_AS(DeltaGrid({0.1, 0.5, -0.1}).points(), std::invalid_argument);
  CHECK_THROWS_AS(DeltaGrid({0.6, 0.5, 0.1}).points(), std::invalid_argument);
  CHECK(DeltaGrid{0.1, 0.5, 0.1}.points().size() == 5);
  std::ostringstream out;
  CHECK_THROWS_AS(write_curve_csv(out, {}, {"no-such-family"}), std::invalid_argument);
  write_curve_csv(out, curve_export(DeltaGrid{0.5, 0.5, 0.1}), {"ggv-lower"});
  CHECK(out.str() == "delta,ggv_lower,ggv_omega,ggv_beta,ggv_optimizer\n0.500000,0.1350372555,0.8075346467,0.5000000000,closed\n");
}

TEST_CASE("search helpers") {
  const auto m = golden_section_max([](double x) { return -(x - 0.3) * (x - 0.3); }, 0.0, 1.0);
  CHECK(std::abs(m.arg - 0.3) < 1e-6);
  const auto edge = golden_section_max([](double x) { return x; }, 0.0, 1.0);
  CHECK(edge.arg == 1.0);
  const auto g = grid_max([](double) { return 1.0; }, 0.0, 1.0, 11, Execution::Serial);
  CHECK(g.arg == 0.0);  // ties go to the smallest node
  CHECK_THROWS_AS(grid_max([](double x) { return x; }, 0.0, 1.0, 1), std::invalid_argument);
  const auto s = grid_max([](double x) { return std::sin(7 * x); }, 0.0, 1.0, 1001, Execution::Serial);
  const auto p = grid_max([](double x) { return std::sin(7 * x); }, 0.0, 1.0, 1001, Execution::Parallel);
  CHECK(s.arg == p.arg);
  CHECK(s.value == p.value);
}
