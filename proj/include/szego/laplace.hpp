#pragma once

// Integrals of e^{-p} for polynomials with a global minimum, the closed-form
// envelope for quartics, sublevel-set measures and the convexity-interval
// estimates used to prove them.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "szego/config.hpp"
#include "szego/polynomial.hpp"
#include "szego/quadrature.hpp"
#include "szego/report.hpp"

namespace szego {

/// p(x) = beta x^4 + gamma x^3 + delta x^2 with beta > 0 and p >= 0, so the
/// global minimum 0 is attained at the origin.
class GenericQuartic {
public:
  GenericQuartic(double beta, double gamma, double delta)
      : beta_(beta), gamma_(gamma), delta_(delta) {
    if (!admissible(beta, gamma, delta))
      throw InvalidArgument("quartic must have beta > 0, delta >= 0 and "
                            "gamma^2 <= 4 beta delta");
  }

  /// p >= 0 iff x^2 + (gamma/beta) x + delta/beta has non-positive
  /// discriminant; a relative slack of 1e-12 absorbs roundoff in callers
  /// that build a double-touch quartic from computed quantities.
  static bool admissible(double beta, double gamma, double delta) {
    if (!std::isfinite(beta) || !std::isfinite(gamma) || !std::isfinite(delta))
      return false;
    if (!(beta > 0.0) || delta < 0.0)
      return false;
    return gamma * gamma <= 4.0 * beta * delta * (1.0 + 1e-12);
  }

  [[nodiscard]] double beta() const { return beta_; }
  [[nodiscard]] double gamma() const { return gamma_; }
  [[nodiscard]] double delta() const { return delta_; }

  [[nodiscard]] double operator()(double x) const {
    const double x2 = x * x;
    return x2 * ((beta_ * x + gamma_) * x + delta_);
  }

  [[nodiscard]] Polynomial polynomial() const {
    return Polynomial{0.0, 0.0, delta_, gamma_, beta_};
  }

  /// Sorted critical points: 0 and the real roots of 4 beta x^2 + 3 gamma x + 2 delta.
  [[nodiscard]] std::vector<double> critical_points() const {
    std::vector<double> c{0.0};
    const double a = 4.0 * beta_, b = 3.0 * gamma_, cc = 2.0 * delta_;
    const double disc = b * b - 4.0 * a * cc;
    if (disc >= 0.0) {
      const double sq = std::sqrt(disc);
      const double qq = -0.5 * (b + (b >= 0.0 ? sq : -sq));
      if (qq != 0.0) {
        c.push_back(qq / a);
        c.push_back(cc / qq);
      }
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
  }

private:
  double beta_, gamma_, delta_;
};

/// Normal form of a non-convex admissible quartic:
///   p(x) = (B/12) x^2 [x^2 - 2A(2+alpha) x + 6 A^2 (1+alpha)],
/// with p'' = B (x - A)(x - (1+alpha)A) and 0 < alpha <= 1 + sqrt(3).
struct CanonicalQuartic {
  double A = 1.0;
  double B = 1.0;
  double alpha = 1.0;

  static constexpr double alpha_max = 2.7320508075688772935; // 1 + sqrt(3)

  [[nodiscard]] GenericQuartic to_generic() const {
    const double beta = B / 12.0;
    const double gamma = -B * A * (2.0 + alpha) / 6.0;
    const double delta = B * A * A * (1.0 + alpha) / 2.0;
    return {beta, gamma, delta};
  }

  [[nodiscard]] double operator()(double x) const {
    return (B / 12.0) * x * x *
           (x * x - 2.0 * A * (2.0 + alpha) * x + 6.0 * A * A * (1.0 + alpha));
  }
};

struct EnvelopeReport {
  double integral = 0.0;
  double envelope = 0.0;
  double ratio = 0.0;
  double sublevel_measure = 0.0;
};

struct ExpIntegral {
  double value = 0.0;
  double abs_error = 0.0; ///< quadrature estimate plus truncated tails
  double lo = 0.0;        ///< truncation interval
  double hi = 0.0;
  bool converged = true;
};

namespace detail {

/// Outermost solutions of p(x) = level given every critical point of p;
/// p is increasing to the right of the last one and decreasing to the left
/// of the first one.
inline double outer_crossing(const auto &p, double from, double dir, double level) {
  double step = 1e-3 * (1.0 + std::abs(from));
  double inner = from;
  double outer = from + dir * step;
  for (int it = 0; it < 2100 && p(outer) < level; ++it) {
    inner = outer;
    step *= 2.0;
    outer = from + dir * step;
  }
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (inner + outer);
    if (m == inner || m == outer)
      break;
    (p(m) < level ? inner : outer) = m;
  }
  return outer;
}

/// Solution of p(x) = level on [a, b] where p is monotone and crosses level.
inline double monotone_crossing(const auto &p, double a, double b, double level) {
  const bool rising = p(a) < p(b);
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    if (m == a || m == b)
      break;
    ((p(m) < level) == rising ? a : b) = m;
  }
  return 0.5 * (a + b);
}

template <class P, class DP>
ExpIntegral integrate_exp_neg_impl(const P &p, const DP &dp, std::vector<double> crit,
                                   const NumericConfig &cfg) {
  std::sort(crit.begin(), crit.end());
  double pmin = std::numeric_limits<double>::infinity();
  for (double x : crit)
    pmin = std::min(pmin, p(x));
  const double level = pmin + cfg.exponent_cutoff;
  ExpIntegral out;
  out.lo = outer_crossing(p, crit.front(), -1.0, level);
  out.hi = outer_crossing(p, crit.back(), +1.0, level);

  // The integration domain is the sublevel set {p <= pmin + cutoff}: p is
  // monotone between consecutive critical points, so each piece holds at
  // most one crossing of the level.
  std::vector<double> knots{out.lo};
  for (double x : crit)
    if (x > out.lo && x < out.hi)
      knots.push_back(x);
  knots.push_back(out.hi);
  std::vector<double> cuts{out.lo};
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double a = knots[i], b = knots[i + 1];
    if ((p(a) <= level) != (p(b) <= level))
      cuts.push_back(monotone_crossing(p, a, b, level));
    cuts.push_back(b);
  }
  cuts.push_back(out.hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<quad::Segment> segs;
  double gaps = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    if (p(0.5 * (a + b)) <= level)
      segs.push_back(quad::Segment::finite(a, b));
    else
      gaps += b - a;
  }
  auto f = [&](double x) { return std::exp(-(p(x) - pmin)); };
  const auto res = quad::integrate_segments<double>(f, segs, quad::Options::from(cfg));
  // Outside the sublevel set the integrand is below e^{-cutoff}; beyond the
  // outer crossings p grows at least linearly with slope |p'| there.
  const double cut = std::exp(-cfg.exponent_cutoff);
  const double tails = cut / std::max(std::abs(dp(out.lo)), 1e-300) +
                       cut / std::max(std::abs(dp(out.hi)), 1e-300);
  const double scale = std::exp(-pmin);
  out.value = scale * res.value;
  out.abs_error =
      scale * (res.abs_error + std::min(tails, out.hi - out.lo) + cut * gaps);
  out.converged = res.converged;
  return out;
}

} // namespace detail

/// Integral of e^{-p} over the real line for a coercive polynomial.
inline ExpIntegral integrate_exp_neg_detailed(const Polynomial &p, const NumericConfig &cfg) {
  if (!p.coercive())
    throw NonCoercive("integrand e^{-p} needs even degree and positive leading coefficient");
  const Polynomial dp = p.derivative();
  auto crit = dp.real_roots();
  if (crit.empty())
    crit.push_back(0.0);
  return detail::integrate_exp_neg_impl(p, dp, std::move(crit), cfg);
}

inline ExpIntegral integrate_exp_neg_detailed(const GenericQuartic &p,
                                              const NumericConfig &cfg) {
  const double b = p.beta(), g = p.gamma(), d = p.delta();
  auto dp = [=](double x) { return x * ((4.0 * b * x + 3.0 * g) * x + 2.0 * d); };
  return detail::integrate_exp_neg_impl(p, dp, p.critical_points(), cfg);
}

inline double integrate_exp_neg(const Polynomial &p, const NumericConfig &cfg) {
  return integrate_exp_neg_detailed(p, cfg).value;
}

inline double integrate_exp_neg(const GenericQuartic &p, const NumericConfig &cfg) {
  return integrate_exp_neg_detailed(p, cfg).value;
}

/// [beta^{1/4} + |gamma|^{1/3} + delta^{1/2}]^{-1}.
inline double envelope_estimate(const GenericQuartic &p) {
  return 1.0 / (std::pow(p.beta(), 0.25) + std::cbrt(std::abs(p.gamma())) +
                std::sqrt(p.delta()));
}

/// Normalizes (reflecting x -> -x when the concave interval lies on the
/// negative axis) and returns the canonical parameters, or nothing when p is
/// convex.
inline std::optional<CanonicalQuartic> to_canonical(const GenericQuartic &p) {
  // p'' = 12 beta x^2 + 6 gamma x + 2 delta; convex iff gamma^2 <= (8/3) beta delta.
  const double beta = p.beta();
  const double gamma = -std::abs(p.gamma());
  const double delta = p.delta();
  const double disc = 36.0 * gamma * gamma - 96.0 * beta * delta;
  if (!(disc > 0.0) || delta <= 0.0)
    return std::nullopt;
  const double sq = std::sqrt(disc);
  // Both roots are positive after the reflection; avoid cancellation.
  const double big = (-6.0 * gamma + sq) / (24.0 * beta);
  const double small = (2.0 * delta) / (12.0 * beta * big);
  CanonicalQuartic c;
  c.A = small;
  c.B = 12.0 * beta;
  c.alpha = std::min((big - small) / small, CanonicalQuartic::alpha_max);
  return c;
}

/// |{x : p(x) <= level}| from the real roots of p - level.
inline double sublevel_measure(const Polynomial &p, double level = 1.0) {
  if (!p.coercive())
    throw NonCoercive("sublevel set of a non-coercive polynomial is unbounded");
  if (!(level > 0.0))
    throw InvalidArgument("sublevel level must be > 0");
  const Polynomial shifted = p.shifted(level);
  auto roots = shifted.real_roots();
  double measure = 0.0;
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    const double mid = 0.5 * (roots[i] + roots[i + 1]);
    if (shifted(mid) <= 0.0)
      measure += roots[i + 1] - roots[i];
  }
  return measure;
}

inline double sublevel_measure(const GenericQuartic &p, double level = 1.0) {
  return sublevel_measure(p.polynomial(), level);
}

inline EnvelopeReport envelope_report(const GenericQuartic &p, const NumericConfig &cfg) {
  EnvelopeReport r;
  r.integral = integrate_exp_neg(p, cfg);
  r.envelope = envelope_estimate(p);
  r.ratio = r.integral / r.envelope;
  r.sublevel_measure = sublevel_measure(p, 1.0);
  return r;
}

/// Distance from x0 along direction (+1 or -1) to the point where p has risen
/// by 1, or to x_end when p rises by less than 1 before reaching it. p' must
/// have the sign of the direction and be increasing on the ray.
inline double band_width(const Polynomial &p, double x0, int direction,
                         double x_end = std::numeric_limits<double>::infinity()) {
  if (direction != 1 && direction != -1)
    throw InvalidArgument("band_width direction must be +1 or -1");
  const double dir = direction;
  if (std::isinf(x_end))
    x_end = dir * std::numeric_limits<double>::infinity();
  if (!(dir * (x_end - x0) > 0.0))
    throw InvalidArgument("band_width interval end lies behind x0");

  const double target = p(x0) + 1.0;
  double far = x_end;
  bool reaches = true;
  if (std::isfinite(x_end)) {
    reaches = p(x_end) >= target;
  } else {
    double step = 1e-3 * (1.0 + std::abs(x0));
    far = x0 + dir * step;
    for (int it = 0; it < 2100 && p(far) < target; ++it) {
      step *= 2.0;
      far = x0 + dir * step;
    }
    if (p(far) < target)
      throw NotMonotone("band_width: p does not rise by 1 along the ray");
  }

  const Polynomial dp = p.derivative();
  const Polynomial d2p = dp.derivative();
  constexpr int samples = 257;
  for (int i = 0; i <= samples; ++i) {
    const double x = x0 + (far - x0) * i / samples;
    const double tol = 1e-12 * (1.0 + dp.magnitude(x));
    if (dir * dp(x) < -tol || d2p(x) < -tol)
      throw NotMonotone("band_width: p' is not one-signed and increasing on the ray");
  }
  if (!reaches)
    return std::abs(x_end - x0);

  double inner = x0, outer = far;
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (inner + outer);
    if (m == inner || m == outer)
      break;
    (p(m) < target ? inner : outer) = m;
  }
  return std::abs(0.5 * (inner + outer) - x0);
}

/// min over a grid on (0, A] of p(x) / sum_k |a_k| x^k for p = sum_{k>=2} a_k x^k
/// convex on [0, A]. The reported ratio_min is the lower constant.
inline SweepReport bnw_lower_constant_check(const Polynomial &p, double A, int grid = 4000) {
  if (!(A > 0.0))
    throw InvalidArgument("interval end A must be > 0");
  const double scale = p.magnitude(A);
  if (std::abs(p.coeff(0)) > 1e-14 * scale || std::abs(p.coeff(1)) > 1e-14 * scale)
    throw InvalidArgument("polynomial must satisfy p(0) = p'(0) = 0");
  const Polynomial d2p = p.derivative().derivative();
  SweepReport rep;
  rep.suite = "bnw";
  for (int i = 1; i <= grid; ++i) {
    const double x = A * i / grid;
    if (d2p(x) < -1e-12 * (1.0 + d2p.magnitude(x)))
      throw InvalidArgument("polynomial is not convex on [0, A]");
    rep.observe(p(x) / p.magnitude(x), {{"x", x}});
  }
  rep.pass = rep.ratio_min > 0.0;
  return rep;
}

struct Degree6Counterexample {
  double a = 0.0;
  double integral = 0.0;
  double naive_envelope = 0.0;
  double ratio = 0.0;
};

/// p(x) = x^2 (x - a)^4, for which the degree-6 analogue of the quartic
/// envelope fails: integral / envelope grows without bound in a.
inline Degree6Counterexample counterexample_degree6(double a, const NumericConfig &cfg) {
  if (!(a > 1.0))
    throw InvalidArgument("counterexample parameter a must be > 1");
  const double a2 = a * a;
  const Polynomial p{0.0, 0.0, a2 * a2, -4.0 * a2 * a, 6.0 * a2, -4.0 * a, 1.0};
  Degree6Counterexample out;
  out.a = a;
  out.integral = integrate_exp_neg(p, cfg);
  double sum = 0.0;
  for (int j = 2; j <= 6; ++j)
    sum += std::pow(std::abs(p.coeff(j)), 1.0 / j);
  out.naive_envelope = 1.0 / sum;
  out.ratio = out.integral / out.naive_envelope;
  return out;
}

/// Random admissible quartic: beta, delta log-uniform on [1e-4, 1e4] and
/// gamma = +-u * 2 sqrt(beta delta), u uniform on [0, 1]. `touch` forces
/// u = 1, the double-touch case alpha = 1 + sqrt(3).
inline GenericQuartic random_admissible_quartic(std::mt19937_64 &rng, bool touch = false) {
  std::uniform_real_distribution<double> expo(-4.0, 4.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double beta = std::pow(10.0, expo(rng));
  const double delta = std::pow(10.0, expo(rng));
  const double u = touch ? 1.0 : unit(rng);
  const double sign = unit(rng) < 0.5 ? -1.0 : 1.0;
  return {beta, sign * u * 2.0 * std::sqrt(beta * delta), delta};
}

} // namespace szego
