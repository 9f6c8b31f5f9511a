#include "ternary/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>

namespace ternary::asymptotic {

namespace {

constexpr double kOmegaFixed = 2.0 / 3.0;
constexpr double kGgvCutoff = 8.0 / 9.0;

void require_delta(double delta) {
  if (!(delta >= 0.0 && delta < 2.0)) throw std::domain_error("delta must lie in [0, 2)");
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

/// x log2 x with the continuous extension 0 at x = 0.
double xlog2x(double x) { return x <= 0.0 ? 0.0 : x * std::log2(x); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10f", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace

double log3_2() { return std::log(2.0) / std::log(3.0); }

double entropy(int q, double x) {
  if (q < 2) throw std::domain_error("entropy needs q >= 2");
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("entropy argument outside [0, 1]");
  const double lq = std::log2(static_cast<double>(q));
  return (-xlog2x(x) - xlog2x(1.0 - x) + x * std::log2(static_cast<double>(q - 1))) / lq;
}

double h2(double x) {
  x = clamp01(x);
  return -xlog2x(x) - xlog2x(1.0 - x);
}

double alpha_gv(int q, double delta) {
  if (delta < 0.0) throw std::domain_error("delta must be nonnegative");
  if (delta >= 1.0 - 1.0 / q) return 0.0;
  return std::max(0.0, 1.0 - entropy(q, delta));
}

SimpleBounds tau_simple_bounds(double delta) {
  require_delta(delta);
  const double l = log3_2();
  const double a2_half = alpha_gv(2, delta / 2.0);
  SimpleBounds b;
  b.lower_a3 = alpha_gv(3, delta);
  b.upper_a3_half = 1.0;
  b.lower_binary = l * a2_half;
  b.upper_binary = 2.0 * l;
  b.lower_double = std::max(0.0, std::log(0.75) / std::log(3.0) + 2.0 * l * a2_half);
  return b;
}

std::string_view source_name(OptimizerSource s) {
  switch (s) {
    case OptimizerSource::ClosedForm: return "closed";
    case OptimizerSource::Numeric: return "numeric";
    case OptimizerSource::Boundary: return "boundary";
    case OptimizerSource::Trivial: return "trivial";
  }
  return "unknown";
}

// ------------------------------------------------------------------ coset

double coset_objective(double delta, double omega) {
  return h2(omega) + omega * (1.0 - h2(delta / (2.0 * omega)));
}

Optimum tau_lower_coset(double delta) {
  require_delta(delta);
  Optimum o;
  if (delta >= 1.0) {
    o.source = OptimizerSource::Trivial;
    o.omega = 1.0;
    return o;
  }
  const double a2 = alpha_gv(2, delta);
  if (delta <= 0.5) {
    o.omega = (2.0 + delta + std::sqrt(4.0 - 8.0 * delta + delta * delta)) / 6.0;
    // At delta = 1/2 the optimiser sits on the open end of (1/2, 1); the
    // objective is continuous there so the limit is the value at 1/2.
    o.source = delta == 0.5 ? OptimizerSource::Boundary : OptimizerSource::ClosedForm;
    o.raw = log3_2() * (-1.0 + a2 + coset_objective(delta, o.omega));
  } else {
    const auto m = golden_section_max([&](double w) { return coset_objective(delta, w); }, delta, 1.0);
    o.omega = m.arg;
    o.source = OptimizerSource::Numeric;
    o.raw = log3_2() * (-1.0 + a2 + m.value);
  }
  o.value = std::max(0.0, o.raw);
  return o;
}

Optimum tau_lower_coset_with(double delta, const std::function<double(double)>& alpha2) {
  require_delta(delta);
  Optimum o;
  o.source = OptimizerSource::Numeric;
  if (delta >= 1.0) {
    o.source = OptimizerSource::Trivial;
    o.omega = 1.0;
    return o;
  }
  const auto m = golden_section_max([&](double w) { return h2(w) + w * alpha2(delta / (2.0 * w)); },
                                    std::max(delta, 0.5), 1.0);
  o.omega = m.arg;
  o.raw = log3_2() * (-1.0 + alpha2(delta) + m.value);
  o.value = std::max(0.0, o.raw);
  return o;
}

// -------------------------------------------------------------------- ggv

double ggv_objective(double omega, double beta) {
  if (omega <= 0.0) return 0.0;
  return h2(omega) + 2.0 * omega * h2(beta / (2.0 * omega)) + omega;
}

Optimum tau_lower_ggv(double delta) {
  require_delta(delta);
  Optimum o;
  if (delta >= kGgvCutoff) {
    o.omega = o.beta = kGgvCutoff;
    o.source = OptimizerSource::Trivial;
    o.raw = 2.0 - log3_2() * ggv_objective(o.omega, o.beta);
    o.value = 0.0;
    return o;
  }
  o.beta = delta;
  o.omega = (2.0 + delta + std::sqrt(2.0 * (-delta * delta + 2.0 * delta + 2.0))) / 6.0;
  o.raw = 2.0 - log3_2() * ggv_objective(o.omega, o.beta);
  o.value = std::max(0.0, o.raw);
  return o;
}

// ------------------------------------------------------- constant weight

double cw_inner_objective(double omega, double beta, double gamma) {
  const double rest = omega - gamma;
  const double tail = rest <= 0.0 ? 0.0 : rest * h2((beta - gamma) / rest);
  const double head = omega <= 0.0 ? 0.0 : omega * h2(gamma / omega);
  const double off = omega >= 1.0 ? 0.0 : (1.0 - omega) * h2(gamma / (1.0 - omega));
  return head + off + tail + gamma;
}

Optimum tau_lower_cw(double delta, double omega) {
  require_delta(delta);
  if (!(omega > 0.0 && omega < 1.0)) throw std::domain_error("omega must lie in (0, 1)");
  Optimum o;
  o.omega = omega;
  const double head = h2(omega) + omega;
  if (delta >= omega * (2.0 - omega)) {
    o.beta = 0.5 * omega * (2.0 - omega);
    o.gamma = omega * (1.0 - omega);
    o.source = OptimizerSource::Trivial;
    o.raw = log3_2() * (head - cw_inner_objective(omega, o.beta, o.gamma));
    o.value = 0.0;
    return o;
  }
  o.beta = delta / 2.0;
  const double u = 1.0 - omega;
  o.gamma = std::max(0.0, u + delta / 2.0 - std::sqrt(u * u + 0.25 * delta * delta));
  o.raw = log3_2() * (head - cw_inner_objective(omega, o.beta, o.gamma));
  o.value = std::max(0.0, o.raw);
  return o;
}

double optimal_omega_cw(double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw std::domain_error("optimal omega defined for delta in [0, 1]");
  return (1.0 + delta + std::sqrt(delta * delta - delta + 1.0)) / 3.0;
}

Optimum tau_lower_cw_optimized(double delta) {
  require_delta(delta);
  if (delta >= 1.0) {
    Optimum o;
    o.omega = 1.0;
    o.source = OptimizerSource::Trivial;
    return o;
  }
  return tau_lower_cw(delta, optimal_omega_cw(delta));
}

double quartic(double delta, double w) {
  return (((3.0 * w - 2.0 * (4.0 + delta)) * w + 4.0 * (1.0 + 2.0 * delta)) * w - 2.0 * delta * (2.0 + delta)) * w +
         delta * delta;
}

std::array<double, 4> quartic_roots(double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw std::domain_error("quartic roots are real for delta in [0, 1]");
  const double a = std::sqrt(1.0 - delta);
  const double b = std::sqrt(delta * delta - delta + 1.0);
  return {1.0 - a, 1.0 + a, (1.0 + delta - b) / 3.0, (1.0 + delta + b) / 3.0};
}

// --------------------------------------------------------------- search

Maximum golden_section_max(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  Maximum best{c, fc};
  if (fd > best.value) best = {d, fd};
  for (double x : {lo, hi}) {
    const double v = f(x);
    if (v > best.value) best = {x, v};
  }
  return best;
}

Maximum grid_max(const std::function<double(double)>& f, double lo, double hi, int points, Execution exec) {
  if (points < 2) throw std::invalid_argument("grid needs at least two points");
  std::vector<double> values(static_cast<std::size_t>(points));
  const double h = (hi - lo) / (points - 1);
  auto node = [&](int i) { return i == points - 1 ? hi : lo + h * i; };
  if (exec == Execution::Serial) {
    for (int i = 0; i < points; ++i) values[static_cast<std::size_t>(i)] = f(node(i));
  } else {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < points; ++i) values[static_cast<std::size_t>(i)] = f(node(i));
  }
  const auto it = std::max_element(values.begin(), values.end());
  const int i = static_cast<int>(it - values.begin());
  return {node(i), *it};
}

// ---------------------------------------------------------------- curves

AsymptoticPoint evaluate_point(double delta) {
  AsymptoticPoint p;
  p.delta = delta;
  p.simple = tau_simple_bounds(delta);
  p.coset = tau_lower_coset(delta);
  p.ggv = tau_lower_ggv(delta);
  p.cw = tau_lower_cw_optimized(delta);
  p.cw_fixed = tau_lower_cw(delta, kOmegaFixed);
  return p;
}

std::vector<double> DeltaGrid::points() const {
  if (!(step > 0.0)) throw std::invalid_argument("delta step must be positive");
  if (from > to) throw std::invalid_argument("delta range is empty");
  require_delta(from);
  require_delta(to);
  std::vector<double> out;
  for (long i = 0;; ++i) {
    const double x = from + static_cast<double>(i) * step;
    if (x > to + 1e-9 * step) break;
    out.push_back(x);
  }
  return out;
}

std::vector<AsymptoticPoint> curve_export(const DeltaGrid& grid, Execution exec) {
  const auto deltas = grid.points();
  std::vector<AsymptoticPoint> rows(deltas.size());
  const auto count = static_cast<std::int64_t>(deltas.size());
  if (exec == Execution::Serial) {
    for (std::int64_t i = 0; i < count; ++i) rows[static_cast<std::size_t>(i)] = evaluate_point(deltas[static_cast<std::size_t>(i)]);
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) rows[static_cast<std::size_t>(i)] = evaluate_point(deltas[static_cast<std::size_t>(i)]);
  }
  return rows;
}

const std::vector<std::string>& curve_families() {
  static const std::vector<std::string> names{"a3-lower",     "a3-half-upper", "binary-lower",
                                              "binary-upper", "double-lower",  "coset-lower",
                                              "ggv-lower",    "cw-lower",      "cw-lower-fixed"};
  return names;
}

void write_curve_csv(std::ostream& out, const std::vector<AsymptoticPoint>& rows,
                     const std::vector<std::string>& families) {
  const auto& known = curve_families();
  for (const auto& f : families) {
    if (std::find(known.begin(), known.end(), f) == known.end()) {
      throw std::invalid_argument("unknown curve family '" + f + "'");
    }
  }
  out << "delta";
  for (const auto& f : families) {
    if (f == "a3-lower") out << ",a3_lower";
    else if (f == "a3-half-upper") out << ",a3_half_upper_trivial_alpha";
    else if (f == "binary-lower") out << ",binary_lower";
    else if (f == "binary-upper") out << ",binary_upper_trivial_alpha";
    else if (f == "double-lower") out << ",double_lower";
    else if (f == "coset-lower") out << ",coset_lower,coset_omega,coset_optimizer";
    else if (f == "ggv-lower") out << ",ggv_lower,ggv_omega,ggv_beta,ggv_optimizer";
    else if (f == "cw-lower") out << ",cw_lower,cw_omega,cw_beta,cw_gamma,cw_optimizer";
    else if (f == "cw-lower-fixed") out << ",cw_fixed_lower,cw_fixed_omega,cw_fixed_beta,cw_fixed_gamma";
  }
  out << '\n';
  for (const auto& p : rows) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", p.delta);
    out << buf;
    for (const auto& f : families) {
      if (f == "a3-lower") out << ',' << fmt(p.simple.lower_a3);
      else if (f == "a3-half-upper") out << ',' << fmt(p.simple.upper_a3_half);
      else if (f == "binary-lower") out << ',' << fmt(p.simple.lower_binary);
      else if (f == "binary-upper") out << ',' << fmt(p.simple.upper_binary);
      else if (f == "double-lower") out << ',' << fmt(p.simple.lower_double);
      else if (f == "coset-lower") out << ',' << fmt(p.coset.value) << ',' << fmt(p.coset.omega) << ',' << source_name(p.coset.source);
      else if (f == "ggv-lower")
        out << ',' << fmt(p.ggv.value) << ',' << fmt(p.ggv.omega) << ',' << fmt(p.ggv.beta) << ',' << source_name(p.ggv.source);
      else if (f == "cw-lower")
        out << ',' << fmt(p.cw.value) << ',' << fmt(p.cw.omega) << ',' << fmt(p.cw.beta) << ',' << fmt(p.cw.gamma) << ','
            << source_name(p.cw.source);
      else if (f == "cw-lower-fixed")
        out << ',' << fmt(p.cw_fixed.value) << ',' << fmt(p.cw_fixed.omega) << ',' << fmt(p.cw_fixed.beta) << ','
            << fmt(p.cw_fixed.gamma);
    }
    out << '\n';
  }
}

// ------------------------------------------------------------ verifiers

namespace {

/// sup over beta in (0, min(delta, 2w)] of the ggv objective, by golden section.
double ggv_sup_over_beta(double delta, double omega) {
  const double hi = std::min(delta, 2.0 * omega);
  if (hi <= 0.0) return ggv_objective(omega, 0.0);
  return golden_section_max([&](double b) { return ggv_objective(omega, b); }, 0.0, hi).value;
}

/// Nested golden-section sup of the constant-weight inner objective.
double cw_inner_sup(double delta, double omega) {
  const double beta_hi = std::min(delta / 2.0, omega);
  return golden_section_max(
             [&](double beta) {
               const double gamma_hi = std::min({beta, omega, 1.0 - omega});
               return golden_section_max([&](double g) { return cw_inner_objective(omega, beta, g); }, 0.0, gamma_hi,
                                         1e-10)
                   .value;
             },
             0.0, beta_hi, 1e-10)
      .value;
}

OptimizerCheck check(std::string family, double delta, double closed, double numeric, double tol) {
  // A grid or search can only under-estimate a supremum, so a closed form
  // may exceed it but never fall short by more than the tolerance.
  return OptimizerCheck{std::move(family), delta, closed, numeric, tol, std::abs(closed - numeric) < tol};
}

}  // namespace

std::vector<OptimizerCheck> verify_optimizers(const VerifyOptions& opt) {
  std::vector<OptimizerCheck> out;
  const double l = log3_2();
  const int pts = opt.grid_points;

  // Every family is swept on delta = 0.05, 0.10, ... up to its closed-form range.
  for (int k = 1; k <= 10; ++k) {
    const double delta = 0.05 * k;
    const auto closed = tau_lower_coset(delta);
    const auto grid = grid_max([&](double w) { return coset_objective(delta, w); }, std::max(delta, 0.5), 1.0, pts,
                               opt.exec);
    const double numeric = l * (-1.0 + alpha_gv(2, delta) + grid.value);
    out.push_back(check("coset-omega", delta, closed.raw, numeric, opt.tolerance));
  }

  for (int k = 1; k <= 17; ++k) {
    const double delta = 0.05 * k;
    const auto closed = tau_lower_ggv(delta);
    const auto grid = grid_max([&](double w) { return ggv_sup_over_beta(delta, w); }, 1e-9, 1.0 - 1e-9, pts, opt.exec);
    out.push_back(check("ggv-omega-beta", delta, closed.raw, 2.0 - l * grid.value, opt.tolerance));
  }

  for (int k = 1; k <= 18; ++k) {
    const double delta = 0.05 * k;
    const auto closed = tau_lower_cw_optimized(delta);
    const auto grid =
        grid_max([&](double w) { return tau_lower_cw(delta, w).value; }, 1e-9, 1.0 - 1e-9, pts, opt.exec);
    out.push_back(check("cw-omega", delta, closed.value, grid.value, opt.tolerance));
  }

  for (double delta : {0.1, 0.3, 0.5}) {
    for (double omega : {0.5, kOmegaFixed, 0.8}) {
      if (delta >= omega * (2.0 - omega)) continue;
      const auto closed = tau_lower_cw(delta, omega);
      const double numeric = l * (h2(omega) + omega - cw_inner_sup(delta, omega));
      out.push_back(check("cw-beta-gamma(omega=" + fmt(omega).substr(0, 6) + ")", delta, closed.raw, numeric,
                          opt.tolerance));
    }
  }

  std::mt19937_64 rng(opt.seed);
  double worst = 0.0;
  double worst_delta = 0.0;
  bool side_ok = true;
  for (int s = 0; s < opt.quartic_samples; ++s) {
    const double delta = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    for (double r : quartic_roots(delta)) {
      const double res = std::abs(quartic(delta, r));
      if (res > worst) {
        worst = res;
        worst_delta = delta;
      }
    }
    const double w = optimal_omega_cw(delta);
    side_ok &= delta < w * (2.0 - w);
  }
  out.push_back(check("quartic-residual", worst_delta, worst, 0.0, 1e-12));
  out.push_back(OptimizerCheck{"cw-omega-side-condition", 0.0, side_ok ? 1.0 : 0.0, 1.0, 0.0, side_ok});

  out.push_back(check("delta0-coset-omega", 0.0, tau_lower_coset(0.0).omega, kOmegaFixed, 1e-9));
  out.push_back(check("delta0-ggv-omega", 0.0, tau_lower_ggv(0.0).omega, kOmegaFixed, 1e-9));
  out.push_back(check("delta0-cw-omega", 0.0, optimal_omega_cw(0.0), kOmegaFixed, 1e-9));
  out.push_back(check("delta0-coset-value", 0.0, tau_lower_coset(0.0).value, 1.0, 1e-9));
  out.push_back(check("delta0-ggv-value", 0.0, tau_lower_ggv(0.0).value, 1.0, 1e-9));
  out.push_back(check("delta0-cw-value", 0.0, tau_lower_cw(0.0, kOmegaFixed).value, 1.0, 1e-9));
  return out;
}

}  // namespace ternary::asymptotic
