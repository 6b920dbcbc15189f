#pragma once

// Property sweeps. Each suite returns a SweepReport whose ratio range is the
// comparability interval (or the quantity being tracked) and whose metrics
// hold the individual checks; `pass` is the conjunction of the checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "szego/config.hpp"
#include "szego/curve.hpp"
#include "szego/kernel.hpp"
#include "szego/laplace.hpp"
#include "szego/legendre.hpp"
#include "szego/report.hpp"

namespace szego::verify {

struct Options {
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
};

inline const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{
      "envelope", "sublevel", "legendre", "n-comparability",
      "asymptoticA", "localA", "divergence", "counterexample6"};
  return names;
}

inline bool is_suite(const std::string &name) {
  const auto &n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

namespace detail {

/// Every tenth sample is a double-touch quartic (alpha = 1 + sqrt(3)).
inline std::vector<GenericQuartic> quartic_sample(const Options &opt) {
  std::mt19937_64 rng(opt.seed);
  std::vector<GenericQuartic> out;
  out.reserve(opt.samples);
  for (std::size_t i = 0; i < opt.samples; ++i)
    out.push_back(random_admissible_quartic(rng, i % 10 == 9));
  return out;
}

inline NamedValues quartic_params(const GenericQuartic &p) {
  return {{"beta", p.beta()}, {"gamma", p.gamma()}, {"delta", p.delta()}};
}

} // namespace detail

/// integral / envelope over random admissible quartics; spread must be <= 100.
inline SweepReport envelope_suite(const NumericConfig &cfg, const Options &opt) {
  SweepReport rep;
  rep.suite = "envelope";
  for (const auto &p : detail::quartic_sample(opt))
    rep.observe(integrate_exp_neg(p, cfg) / envelope_estimate(p), detail::quartic_params(p));
  rep.record("spread", rep.spread());
  rep.pass = rep.n_samples > 0 && rep.spread() <= 100.0;
  return rep;
}

/// integral / |{p <= 1}| on the same sample; bounded below by 1/e exactly.
inline SweepReport sublevel_suite(const NumericConfig &cfg, const Options &opt) {
  SweepReport rep;
  rep.suite = "sublevel";
  for (const auto &p : detail::quartic_sample(opt))
    rep.observe(integrate_exp_neg(p, cfg) / sublevel_measure(p, 1.0),
                detail::quartic_params(p));
  rep.record("lower_bound", std::exp(-1.0));
  rep.record("C_prime", rep.ratio_max);
  rep.pass = rep.n_samples > 0 && rep.ratio_min >= std::exp(-1.0) &&
             std::isfinite(rep.ratio_max);
  return rep;
}

/// Monotonicity and derivative law of lambda(eta), continuity and convexity of
/// b*, growth of lambda, and b** <= b with equality outside the hull gap.
/// The ratio range tracks finite-difference lambda' / (1 / (3 lambda^2 + p)).
inline SweepReport legendre_suite(const QuarticCurve &curve, const Options &opt) {
  SweepReport rep;
  rep.suite = "legendre";
  const double q = curve.q();
  const double p = curve.p();

  constexpr int grid = 10000;
  const double lo = q - 50.0, hi = q + 50.0;
  bool monotone = true;
  double prev = lambda_of_eta(curve, lo);
  for (int i = 1; i <= grid; ++i) {
    const double eta = lo + (hi - lo) * i / grid;
    const double lam = lambda_of_eta(curve, eta);
    if (!(lam > prev))
      monotone = false;
    prev = lam;
  }

  double worst_deriv = 0.0;
  const double eps = 1e-6;
  for (int i = 0; i <= grid; ++i) {
    const double eta = lo + (hi - lo) * (i + 0.5) / (grid + 1);
    if (std::abs(eta - q) < 1e-3)
      continue;
    const double fd =
        (lambda_of_eta(curve, eta + eps) - lambda_of_eta(curve, eta - eps)) / (2.0 * eps);
    const double lam = lambda_of_eta(curve, eta);
    const double exact = 1.0 / (3.0 * lam * lam + p);
    rep.observe(fd / exact, {{"eta", eta}});
    worst_deriv = std::max(worst_deriv, std::abs(fd / exact - 1.0));
  }

  double jump = 0.0;
  for (int k = 1; k <= 8; ++k) {
    const double e = std::pow(10.0, -k);
    jump = std::abs(b_star(curve, q + e) - b_star(curve, q - e));
  }

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> u(lo, hi);
  double worst_convexity = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 10000; ++i) {
    const double e1 = u(rng), e2 = u(rng);
    const double gap = b_star(curve, 0.5 * (e1 + e2)) -
                       0.5 * (b_star(curve, e1) + b_star(curve, e2));
    worst_convexity = std::max(worst_convexity, gap);
  }

  double growth_min = std::numeric_limits<double>::infinity(), growth_max = 0.0;
  for (double eta : {1e9, -1e9}) {
    const double g = lambda_of_eta(curve, eta) / std::cbrt(eta);
    growth_min = std::min(growth_min, g);
    growth_max = std::max(growth_max, g);
  }

  // Biconjugate: the double tangent of slope q touches b at +-sqrt(-p).
  const double sq = curve.sqrt_neg_p();
  double above = -std::numeric_limits<double>::infinity();
  double off_gap = 0.0;
  double bss_convexity = -std::numeric_limits<double>::infinity();
  constexpr int xi_grid = 240;
  const double xlo = -3.0 * sq, xhi = 3.0 * sq;
  std::vector<double> bss(xi_grid + 1);
  for (int i = 0; i <= xi_grid; ++i) {
    const double xi = xlo + (xhi - xlo) * i / xi_grid;
    bss[i] = b_star_star(curve, xi);
    above = std::max(above, bss[i] - curve.b(xi));
    if (std::abs(xi) >= sq)
      off_gap = std::max(off_gap, std::abs(bss[i] - curve.b(xi)));
  }
  for (int i = 1; i < xi_grid; ++i)
    bss_convexity = std::max(bss_convexity, bss[i] - 0.5 * (bss[i - 1] + bss[i + 1]));

  rep.record("monotone", monotone);
  rep.record("derivative_max_rel_err", worst_deriv);
  rep.record("continuity_jump_at_1e-8", jump);
  rep.record("midpoint_convexity_max_gap", worst_convexity);
  rep.record("growth_ratio_min", growth_min);
  rep.record("growth_ratio_max", growth_max);
  rep.record("bss_minus_b_max", above);
  rep.record("bss_off_gap_max_abs_diff", off_gap);
  rep.record("bss_midpoint_max_gap", bss_convexity);
  rep.pass = monotone && worst_deriv <= 1e-5 && jump < 1e-6 && worst_convexity <= 1e-12 &&
             growth_min >= 0.99 && growth_max <= 1.01 && above <= 1e-10 &&
             off_gap <= 1e-8 && bss_convexity <= 1e-10;
  return rep;
}

/// N / envelope over (eta, tau) in [q-50, q+50] x [1e-2, 1e3], and agreement of
/// the centred evaluation with direct quadrature of the uncentred exponent.
inline SweepReport n_comparability_suite(const QuarticCurve &curve, const NumericConfig &cfg) {
  SweepReport rep;
  rep.suite = "n-comparability";
  constexpr int n_eta = 41, n_tau = 21;
  for (int i = 0; i < n_eta; ++i) {
    const double eta = curve.q() - 50.0 + 100.0 * i / (n_eta - 1);
    for (int j = 0; j < n_tau; ++j) {
      const double tau = std::pow(10.0, -2.0 + 5.0 * j / (n_tau - 1));
      rep.observe(n_integral(curve, eta, tau, cfg).ratio(), {{"eta", eta}, {"tau", tau}});
    }
  }

  // 2 tau (b(l) - eta l + b*(eta)) has minimum 0, so e^{-.} integrates to Ntilde.
  double worst = 0.0;
  for (double eta : {-10.0, -1.0, 0.0, 1.0, 10.0})
    for (double tau : {1e-2, 1e-1, 1.0, 10.0, 100.0}) {
      const double e = curve.q() + eta;
      const double c = 2.0 * tau;
      const Polynomial uncentred{c * b_star(curve, e), c * (curve.q() - e),
                                 c * 0.5 * curve.p(), 0.0, c * 0.25};
      const double direct = integrate_exp_neg(uncentred, cfg);
      const double centred = n_tilde(curve, lambda_of_eta(curve, e), tau, cfg);
      worst = std::max(worst, std::abs(direct / centred - 1.0));
    }

  rep.record("spread", rep.spread());
  rep.record("centred_vs_direct_max_rel_err", worst);
  rep.pass = rep.spread() <= 100.0 && worst <= 1e-6;
  return rep;
}

/// A / |eta|^{4/3} at |eta| = 1e9 for three (x, r) pairs and both signs.
inline SweepReport asymptotic_A_suite(const QuarticCurve &curve) {
  SweepReport rep;
  rep.suite = "asymptoticA";
  const std::vector<std::pair<double, double>> pairs{{0.0, 0.0}, {3.0, -7.0}, {2.0, 2.0}};
  for (const auto &[x, r] : pairs) {
    const auto a = asymptotic_A_check(curve, x, r);
    rep.observe(a.limit_positive, {{"x", x}, {"r", r}, {"eta", 1e9}});
    rep.observe(a.limit_negative, {{"x", x}, {"r", r}, {"eta", -1e9}});
  }
  rep.pass = rep.ratio_min >= 1.485 && rep.ratio_max <= 1.515;
  return rep;
}

/// The three local profiles of A near its zero, each on a grid of 2001
/// points in eta_0 +- 100.
inline SweepReport local_A_suite(const QuarticCurve &curve) {
  SweepReport rep;
  rep.suite = "localA";
  const double sq = curve.sqrt_neg_p();
  const std::vector<std::pair<double, double>> pairs{{2.0 * sq, 2.0 * sq}, {sq, sq},
                                                     {-sq, -sq}, {sq, -sq}};
  bool all = true;
  int idx = 0;
  for (const auto &[x, r] : pairs) {
    const double centre = x == r && std::abs(x) > sq * (1 + 1e-9)
                              ? x * x * x + curve.p() * x + curve.q()
                              : curve.q();
    std::vector<double> grid;
    for (int i = 0; i <= 2000; ++i)
      grid.push_back(centre - 100.0 + 0.1 * i + 0.0123);
    const auto sub = local_A_structure(curve, x, r, grid);
    const std::string tag = "pair" + std::to_string(idx++) + "_";
    rep.record(tag + "case", sub.metric("case"));
    rep.record(tag + "ratio_min", sub.ratio_min);
    rep.record(tag + "ratio_max", sub.ratio_max);
    rep.observe(sub.ratio_min, {{"x", x}, {"r", r}});
    rep.observe(sub.ratio_max, {{"x", x}, {"r", r}});
    all = all && sub.pass;
  }
  rep.pass = all;
  return rep;
}

/// Blow-up of the absolute integral as delta -> 0+ at a point of each branch
/// of the singular set, next to the finite value at the regular diagonal
/// point (0, 0). The ratio range tracks the fitted exponents.
inline SweepReport divergence_suite(const QuarticCurve &curve, const NumericConfig &cfg,
                                    double floor = 1e6) {
  SweepReport rep;
  rep.suite = "divergence";
  const double sq = curve.sqrt_neg_p();
  const std::vector<double> deltas{1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
  const std::vector<std::pair<double, double>> pairs{{2.0 * sq, 2.0 * sq}, {sq, -sq}};
  bool ok = true;
  int idx = 0;
  for (const auto &[x, r] : pairs) {
    const auto probe = divergence_probe(curve, x, r, deltas, cfg);
    const std::string tag = "pair" + std::to_string(idx++) + "_";
    rep.record(tag + "x", x);
    rep.record(tag + "r", r);
    for (std::size_t i = 0; i < deltas.size(); ++i)
      rep.record(tag + "S_at_" + std::to_string(static_cast<int>(std::round(-std::log10(deltas[i])))),
                 probe.s_values[i]);
    rep.record(tag + "fitted_exponent", probe.fitted_exponent);
    rep.observe(probe.fitted_exponent, {{"x", x}, {"r", r}});
    ok = ok && probe.strictly_increasing && probe.s_values.back() > floor;
  }
  const double regular = abs_kernel_integral(curve, 0.0, 0.0, 0.0, 0, 0, cfg);
  const double singular = abs_kernel_integral(curve, sq, -sq, 0.0, 0, 0, cfg);
  rep.record("regular_diagonal_S0", regular);
  rep.record("offdiagonal_S0", singular);
  rep.record("floor", floor);
  rep.pass = ok && std::isfinite(regular) && std::isinf(singular);
  return rep;
}

/// ratio(a) for the degree-6 counterexample, a in {2, 4, 8, 16}; the ratio
/// must increase and ratio(16)/ratio(2) must reach 8.
inline SweepReport counterexample6_suite(const NumericConfig &cfg) {
  SweepReport rep;
  rep.suite = "counterexample6";
  std::vector<double> ratios;
  for (double a : {2.0, 4.0, 8.0, 16.0}) {
    const auto c = counterexample_degree6(a, cfg);
    ratios.push_back(c.ratio);
    rep.observe(c.ratio, {{"a", a}});
    rep.record("ratio_a" + std::to_string(static_cast<int>(a)), c.ratio);
  }
  bool increasing = true;
  for (std::size_t i = 1; i < ratios.size(); ++i)
    increasing = increasing && ratios[i] > ratios[i - 1];
  const double growth = ratios.back() / ratios.front();
  rep.record("growth_16_over_2", growth);
  rep.record("monotone", increasing);
  rep.pass = increasing && growth >= 8.0;
  return rep;
}

inline SweepReport run_suite(const std::string &name, const QuarticCurve &curve,
                             const NumericConfig &cfg, const Options &opt) {
  if (name == "envelope")
    return envelope_suite(cfg, opt);
  if (name == "sublevel")
    return sublevel_suite(cfg, opt);
  if (name == "legendre")
    return legendre_suite(curve, opt);
  if (name == "n-comparability")
    return n_comparability_suite(curve, cfg);
  if (name == "asymptoticA")
    return asymptotic_A_suite(curve);
  if (name == "localA")
    return local_A_suite(curve);
  if (name == "divergence")
    return divergence_suite(curve, cfg);
  if (name == "counterexample6")
    return counterexample6_suite(cfg);
  throw InvalidArgument("unknown suite '" + name + "'");
}

} // namespace szego::verify
