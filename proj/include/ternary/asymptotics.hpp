#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ternary/parallel.hpp"

/// Exponents of the bounds: tau(delta) = limsup (1/n) log3 T(n, ceil(delta n)).
namespace ternary::asymptotic {

/// h_q(x) = -x log_q x - (1-x) log_q (1-x) + x log_q (q-1), continuous at 0 and 1.
/// Throws std::domain_error for x outside [0, 1].
double entropy(int q, double x);
/// Binary entropy with arguments clamped into [0, 1]; for internal objectives.
double h2(double x);

/// Asymptotic GV rate max(0, 1 - h_q(delta)), zero for delta >= 1 - 1/q.
double alpha_gv(int q, double delta);

/// log_3 2.
double log3_2();

/// Bounds that need no optimisation.  The upper ones use alpha_q <= 1.
struct SimpleBounds {
  double lower_a3 = 0;       ///< alpha_3(delta)
  double upper_a3_half = 0;  ///< alpha_3(delta/2) with alpha_3 <= 1
  double lower_binary = 0;   ///< log3(2) alpha_2(delta/2)
  double upper_binary = 0;   ///< 2 log3(2) alpha_2(delta/2) with alpha_2 <= 1
  double lower_double = 0;   ///< log3(3/4) + 2 log3(2) alpha_2(delta/2), clamped
};

SimpleBounds tau_simple_bounds(double delta);

enum class OptimizerSource { ClosedForm, Numeric, Boundary, Trivial };
std::string_view source_name(OptimizerSource s);

struct Optimum {
  double value = 0;
  double omega = 0;
  double beta = 0;
  double gamma = 0;
  OptimizerSource source = OptimizerSource::ClosedForm;
  /// Value before clamping at zero.
  double raw = 0;
};

/// h2(w) + w (1 - h2(delta / 2w)): the quantity maximised over w in the coset bound.
double coset_objective(double delta, double omega);
/// Coset-averaging bound with the binary GV rate.  Closed-form omega for
/// delta <= 1/2 (flagged Boundary at exactly 1/2), golden-section search
/// over (delta, 1) otherwise, zero for delta >= 1.
Optimum tau_lower_coset(double delta);
/// Same bound with a caller-supplied lower bound on alpha_2; always numeric.
Optimum tau_lower_coset_with(double delta, const std::function<double(double)>& alpha2);

/// h2(w) + 2w h2(beta / 2w) + w.
double ggv_objective(double omega, double beta);
/// Average-ball GV bound: beta = delta and the closed-form omega below 8/9,
/// zero (omega = beta = 8/9) from 8/9 on.
Optimum tau_lower_ggv(double delta);

/// w h2(g/w) + (1-w) h2(g/(1-w)) + (w-g) h2((b-g)/(w-g)) + g.
double cw_inner_objective(double omega, double beta, double gamma);
/// Constant-weight GV bound at fixed omega in (0, 1), inner optimisers in
/// closed form.  Zero when delta >= omega (2 - omega).
Optimum tau_lower_cw(double delta, double omega);
/// (1 + delta + sqrt(delta^2 - delta + 1)) / 3 for delta in [0, 1].
double optimal_omega_cw(double delta);
Optimum tau_lower_cw_optimized(double delta);

/// 3w^4 - 2(4+delta)w^3 + 4(1+2delta)w^2 - 2delta(2+delta)w + delta^2.
double quartic(double delta, double omega);
/// 1 - sqrt(1-delta), 1 + sqrt(1-delta), (1+delta -/+ sqrt(delta^2-delta+1))/3.
std::array<double, 4> quartic_roots(double delta);

struct Maximum {
  double arg = 0;
  double value = 0;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi]; the
/// endpoints are also evaluated so a maximum on the boundary is found.
Maximum golden_section_max(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-11);
/// Max of f over `points` equally spaced nodes of [lo, hi], endpoints included.
/// Ties go to the smallest node.
Maximum grid_max(const std::function<double(double)>& f, double lo, double hi, int points,
                 Execution exec = Execution::Parallel);

struct AsymptoticPoint {
  double delta = 0;
  SimpleBounds simple;
  Optimum coset;
  Optimum ggv;
  Optimum cw;        ///< omega optimised
  Optimum cw_fixed;  ///< omega = 2/3
};

AsymptoticPoint evaluate_point(double delta);

struct DeltaGrid {
  double from = 0.01;
  double to = 0.99;
  double step = 0.01;

  /// Throws std::invalid_argument for step <= 0 or from > to.
  std::vector<double> points() const;
};

std::vector<AsymptoticPoint> curve_export(const DeltaGrid& grid, Execution exec = Execution::Parallel);

/// Family names accepted by write_curve_csv.
const std::vector<std::string>& curve_families();
/// CSV with a delta column and, per family, its value and optimiser columns.
void write_curve_csv(std::ostream& out, const std::vector<AsymptoticPoint>& rows,
                     const std::vector<std::string>& families);

struct OptimizerCheck {
  std::string family;
  double delta = 0;
  double closed_form = 0;
  double numeric = 0;
  double tolerance = 0;
  bool pass = false;
};

struct VerifyOptions {
  int grid_points = 10000;
  double tolerance = 1e-6;
  int quartic_samples = 100;
  std::uint64_t seed = 0;
  Execution exec = Execution::Parallel;
};

/// Compares every closed-form optimiser with a numeric supremum and checks
/// the quartic roots and the delta = 0 limits.
std::vector<OptimizerCheck> verify_optimizers(const VerifyOptions& options = {});

}  // namespace ternary::asymptotic
