#pragma once

// Szego kernel of the tube over b(x) = x^4/4 + p x^2/2 + q x:
//
//   S(z, w) = int_R int_0^inf tau exp(eta tau (z1 + conj w1) + i tau (z2 - conj w2))
//                            / N(eta, tau) dtau deta,
//   N(eta, tau) = int_R exp(2 tau (eta lambda - b(lambda))) dlambda,
//
// with the absolute constant set to 1. Every evaluation factors N as
// exp(2 tau b*(eta)) * Ntilde(eta, tau), where Ntilde is an integral of
// exp(-quartic) centred at the global argmax lambda(eta); the large factor is
// folded into the exponent A(x, r, eta) before anything is exponentiated.

#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "szego/config.hpp"
#include "szego/curve.hpp"
#include "szego/laplace.hpp"
#include "szego/legendre.hpp"
#include "szego/quadrature.hpp"
#include "szego/report.hpp"

namespace szego {

struct NEvaluation {
  double eta = 0.0;
  double tau = 0.0;
  double value = 0.0;     ///< N(eta, tau); +inf when it overflows a double
  double log_value = 0.0; ///< log N, always finite
  double envelope = 0.0;  ///< exp(2 tau b*) / D(eta, tau)
  double log_envelope = 0.0;

  [[nodiscard]] double ratio() const { return std::exp(log_value - log_envelope); }
};

enum class Verdict { Converges, SigmaDiagonal, SigmaAntidiagonal };

inline const char *to_string(Verdict v) {
  switch (v) {
  case Verdict::Converges:
    return "Converges";
  case Verdict::SigmaDiagonal:
    return "SigmaDiagonal";
  case Verdict::SigmaAntidiagonal:
    return "SigmaAntidiagonal";
  }
  return "?";
}

struct KernelClassification {
  Verdict verdict = Verdict::Converges;
  /// h + k + b(x) + b(r) - 2 b**((x + r)/2) = inf_eta [delta + A(x, r, eta)].
  double margin = 0.0;
  /// An eta attaining that infimum.
  double eta_star = 0.0;
};

struct DivergenceProbe {
  std::vector<double> deltas;
  std::vector<double> s_values;
  double fitted_exponent = 0.0; ///< least-squares slope of log S vs log delta
  bool strictly_increasing = false;
};

struct KernelValue {
  std::complex<double> value;
  double abs_error = 0.0;
};

/// Which model of 1/N the absolute-convergence integrals use.
enum class NModel {
  Envelope, ///< 1/N replaced by exp(-2 tau b*) D(eta, tau); tau-integral in closed form
  Exact     ///< tau-quadrature against the computed N
};

// --- N(eta, tau) -----------------------------------------------------------

/// D(eta, tau) = tau^{1/4} + tau^{1/3} |lambda|^{1/3} + tau^{1/2} (3 lambda^2 + p)^{1/2}.
inline double n_envelope_denominator(const QuarticCurve &curve, double lambda, double tau) {
  return std::pow(tau, 0.25) + std::cbrt(tau * std::abs(lambda)) +
         std::sqrt(tau * std::max(0.0, curve.d2b(lambda)));
}

/// The quartic tau [b''(l0) y^2 + b'''(l0) y^3 / 3 + y^4 / 2] obtained by
/// expanding 2 tau [B_eta(l0) - B_eta(l0 + y)] about the global argmax l0.
inline GenericQuartic centered_n_exponent(const QuarticCurve &curve, double lambda0,
                                          double tau) {
  return {0.5 * tau, tau * curve.d3b(lambda0) / 3.0, tau * curve.d2b(lambda0)};
}

/// Ntilde(eta, tau) = N(eta, tau) exp(-2 tau b*(eta)).
inline double n_tilde(const QuarticCurve &curve, double lambda0, double tau,
                      const NumericConfig &cfg) {
  return integrate_exp_neg(centered_n_exponent(curve, lambda0, tau), cfg);
}

inline NEvaluation n_integral(const QuarticCurve &curve, double eta, double tau,
                              const NumericConfig &cfg) {
  if (!(tau > 0.0))
    throw InvalidArgument("n_integral needs tau > 0");
  const double lambda0 = lambda_of_eta(curve, eta);
  const double bstar = curve.B(eta, lambda0);
  NEvaluation out;
  out.eta = eta;
  out.tau = tau;
  out.log_value = 2.0 * tau * bstar + std::log(n_tilde(curve, lambda0, tau, cfg));
  out.value = std::exp(out.log_value);
  out.log_envelope = 2.0 * tau * bstar - std::log(n_envelope_denominator(curve, lambda0, tau));
  out.envelope = std::exp(out.log_envelope);
  return out;
}

// --- A(x, r, eta) and the convergence region --------------------------------

/// A(x, r, eta) = b(x) + b(r) - eta (x + r) + 2 b*(eta) >= 0. Negative values
/// at roundoff level are clamped to 0.
inline double exponent_A(const QuarticCurve &curve, double x, double r, double eta) {
  const double bs = b_star(curve, eta);
  const double ax = bs - curve.B(eta, x);
  const double ar = bs - curve.B(eta, r);
  const double a = ax + ar;
  if (a < 0.0) {
    const double scale =
        1.0 + std::abs(bs) + std::abs(eta * x) + std::abs(eta * r) +
        std::abs(curve.b(x)) + std::abs(curve.b(r));
    if (a > -1e-12 * scale)
      return 0.0;
  }
  return a;
}

namespace detail {
inline bool nearly_equal(double a, double b) {
  return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a) + std::abs(b));
}
} // namespace detail

/// Membership of the boundary pair (x, r) in the singular set: x = r with
/// |x| > sqrt(-p), or |x| = |r| = sqrt(-p). Returns the branch, if any.
inline std::optional<Verdict> sigma_branch(const QuarticCurve &curve, double x, double r) {
  const double sq = curve.sqrt_neg_p();
  const bool x_edge = detail::nearly_equal(std::abs(x), sq);
  const bool r_edge = detail::nearly_equal(std::abs(r), sq);
  if (x_edge && r_edge)
    return Verdict::SigmaAntidiagonal;
  if (detail::nearly_equal(x, r) && std::abs(x) > sq && !x_edge)
    return Verdict::SigmaDiagonal;
  return std::nullopt;
}

inline KernelClassification classify(const QuarticCurve &curve, const PointPair &pair) {
  if (!pair.in_closure())
    throw InvalidArgument("classify needs h >= 0 and k >= 0");
  const auto conj = b_star_star_max(curve, 0.5 * (pair.x + pair.r));
  KernelClassification out;
  out.eta_star = conj.argmax;
  out.margin = pair.delta() + curve.b(pair.x) + curve.b(pair.r) - 2.0 * conj.value;
  const double tol = 1e-10 * (1.0 + std::abs(curve.b(pair.x)) + std::abs(curve.b(pair.r)));

  if (pair.on_boundary()) {
    if (const auto branch = sigma_branch(curve, pair.x, pair.r)) {
      if (out.margin > tol)
        throw Inconsistent("singular pair (" + std::to_string(pair.x) + ", " +
                           std::to_string(pair.r) + ") has margin " +
                           std::to_string(out.margin));
      out.verdict = *branch;
      return out;
    }
  }
  if (!(out.margin > 0.0))
    throw Inconsistent("pair (" + std::to_string(pair.x) + ", " + std::to_string(pair.r) +
                       ") is outside the singular set but has margin " +
                       std::to_string(out.margin));
  out.verdict = Verdict::Converges;
  return out;
}

// --- Absolute-convergence integrals ------------------------------------------

/// tau-integrated absolute integrand at one eta with 1/N replaced by its
/// envelope:  |eta|^n sum_a c_a(eta) Gamma(m + 2 + a) / (delta + A)^{m + 2 + a},
/// a in {1/4, 1/3, 1/2}. Returns +inf where delta + A vanishes.
inline double abs_integrand_eta(const QuarticCurve &curve, double x, double r, double delta,
                                int n, int m, double eta) {
  const double s = delta + exponent_A(curve, x, r, eta);
  if (!(s > 0.0))
    return std::numeric_limits<double>::infinity();
  const double lam = lambda_of_eta(curve, eta);
  const double c13 = std::cbrt(std::abs(lam));
  const double c12 = std::sqrt(std::max(0.0, curve.d2b(lam)));
  auto term = [&](double a) {
    const double e = m + 2.0 + a;
    return std::exp(std::lgamma(e) - e * std::log(s));
  };
  const double v = term(0.25) + c13 * term(1.0 / 3.0) + c12 * term(0.5);
  return (n == 0 ? 1.0 : std::pow(std::abs(eta), n)) * v;
}

/// Same quantity with the exact N: |eta|^n int_0^inf tau^{m+1} e^{-tau s} / Ntilde dtau.
inline double abs_integrand_eta_exact(const QuarticCurve &curve, double x, double r,
                                      double delta, int n, int m, double eta,
                                      const NumericConfig &cfg) {
  const double s = delta + exponent_A(curve, x, r, eta);
  if (!(s > 0.0))
    return std::numeric_limits<double>::infinity();
  const double lam = lambda_of_eta(curve, eta);
  auto f = [&](double tau) {
    if (tau <= 0.0)
      return 0.0;
    return std::exp((m + 1) * std::log(tau) - tau * s) / n_tilde(curve, lam, tau, cfg);
  };
  const double tau_max = cfg.exponent_cutoff / s;
  const auto res = quad::integrate(f, 0.0, tau_max, quad::Options::from(cfg), {(m + 1.5) / s});
  return (n == 0 ? 1.0 : std::pow(std::abs(eta), n)) * res.value;
}

namespace detail {

/// Breakpoints for eta-integrals: the kink of b* at q, the minimiser of A and
/// a geometric cluster around it whose depth follows the height of the
/// minimum, so near-singular peaks are resolved.
inline std::vector<double> eta_breakpoints(const QuarticCurve &curve, double eta_star,
                                           double s_min) {
  std::vector<double> pts{curve.q(), eta_star};
  double w = 1.0;
  for (int j = 0; j < 40 && w > 1e-3 * s_min; ++j) {
    pts.push_back(eta_star - w);
    pts.push_back(eta_star + w);
    w *= 0.25;
  }
  return pts;
}

inline double eta_tail_scale(const QuarticCurve &curve, double eta_star) {
  return 1.0 + std::abs(eta_star) + std::abs(curve.q());
}

} // namespace detail

/// The absolute-convergence integral over eta and tau for the (n, m)
/// derivative family at separation delta = h + k. +inf on a non-integrable
/// singularity: delta = 0 with (x, r) in the singular set.
inline double abs_kernel_integral(const QuarticCurve &curve, double x, double r, double delta,
                                  int n, int m, const NumericConfig &cfg,
                                  NModel model = NModel::Envelope) {
  if (!(delta >= 0.0))
    throw InvalidArgument("delta must be >= 0");
  if (n < 0 || m < n)
    throw InvalidArgument("need 0 <= n <= m");
  constexpr double inf = std::numeric_limits<double>::infinity();
  PointPair pair{x, 0, 0, delta, r, 0, 0, 0};
  const auto cls = classify(curve, pair);
  if (cls.verdict != Verdict::Converges)
    return inf;
  const double s_min = cls.margin;
  auto f = [&](double eta) {
    return model == NModel::Envelope
               ? abs_integrand_eta(curve, x, r, delta, n, m, eta)
               : abs_integrand_eta_exact(curve, x, r, delta, n, m, eta, cfg);
  };
  const auto res =
      quad::integrate_line(f, detail::eta_breakpoints(curve, cls.eta_star, s_min),
                           quad::Options::from(cfg),
                           detail::eta_tail_scale(curve, cls.eta_star));
  if (delta == 0.0 && res.value > 1e12)
    return inf;
  return res.value;
}

// --- S(z, w) and its derivatives ---------------------------------------------

/// d^{i1}_{z1} d^{j1}_{conj w1} d^{i2}_{z2} d^{j2}_{conj w2} S(z, w). The
/// derivatives bring down (eta tau)^{i1 + j1} (i tau)^{i2} (-i tau)^{j2}.
inline KernelValue szego_derivative_eval_detailed(const QuarticCurve &curve,
                                                  const PointPair &pair, int i1, int j1,
                                                  int i2, int j2, const NumericConfig &cfg) {
  if (i1 < 0 || j1 < 0 || i2 < 0 || j2 < 0 || i1 + j1 + i2 + j2 > 6)
    throw InvalidArgument("derivative indices must be >= 0 with total order <= 6");
  const auto cls = classify(curve, pair);
  if (cls.verdict != Verdict::Converges)
    throw NotInConvergenceRegion("pair lies in the singular set; S is not defined there");

  using cplx = std::complex<double>;
  const int n = i1 + j1;
  const int m = n + i2 + j2;
  cplx phase{1.0, 0.0};
  for (int i = 0; i < i2; ++i)
    phase *= cplx{0.0, 1.0};
  for (int j = 0; j < j2; ++j)
    phase *= cplx{0.0, -1.0};

  const double delta = pair.delta();
  const double dy = pair.y - pair.s;
  const double dt = pair.t - pair.u;
  const auto opts = quad::Options::from(cfg);

  auto outer = [&](double eta) -> cplx {
    const double s = delta + exponent_A(curve, pair.x, pair.r, eta);
    const double omega = eta * dy + dt;
    const double lam = lambda_of_eta(curve, eta);
    auto inner = [&](double tau) -> cplx {
      if (tau <= 0.0)
        return {0.0, 0.0};
      const double mag =
          std::exp((m + 1) * std::log(tau) - tau * s) / n_tilde(curve, lam, tau, cfg);
      return mag * cplx{std::cos(tau * omega), std::sin(tau * omega)};
    };
    const double tau_max = cfg.exponent_cutoff / s;
    const auto res = quad::integrate<cplx>(inner, 0.0, tau_max, opts, {(m + 1.5) / s});
    return (n == 0 ? 1.0 : std::pow(eta, n)) * res.value;
  };

  const auto res = quad::integrate_line<cplx>(
      outer, detail::eta_breakpoints(curve, cls.eta_star, cls.margin), opts,
      detail::eta_tail_scale(curve, cls.eta_star));
  return {phase * res.value, res.abs_error};
}

inline std::complex<double> szego_derivative_eval(const QuarticCurve &curve,
                                                  const PointPair &pair, int i1, int j1,
                                                  int i2, int j2, const NumericConfig &cfg) {
  return szego_derivative_eval_detailed(curve, pair, i1, j1, i2, j2, cfg).value;
}

inline KernelValue szego_eval_detailed(const QuarticCurve &curve, const PointPair &pair,
                                       const NumericConfig &cfg) {
  return szego_derivative_eval_detailed(curve, pair, 0, 0, 0, 0, cfg);
}

inline std::complex<double> szego_eval(const QuarticCurve &curve, const PointPair &pair,
                                       const NumericConfig &cfg) {
  return szego_eval_detailed(curve, pair, cfg).value;
}

// --- Structure of A ----------------------------------------------------------

struct AsymptoticA {
  std::vector<double> eta;   ///< +-1e3, +-1e6, +-1e9
  std::vector<double> ratio; ///< A / |eta|^{4/3}
  double limit_positive = 0.0; ///< ratio at eta = 1e9
  double limit_negative = 0.0; ///< ratio at eta = -1e9
};

inline AsymptoticA asymptotic_A_check(const QuarticCurve &curve, double x, double r) {
  AsymptoticA out;
  for (double sign : {1.0, -1.0})
    for (double mag : {1e3, 1e6, 1e9}) {
      const double eta = sign * mag;
      out.eta.push_back(eta);
      out.ratio.push_back(exponent_A(curve, x, r, eta) / std::pow(mag, 4.0 / 3.0));
    }
  out.limit_positive = out.ratio[2];
  out.limit_negative = out.ratio[5];
  return out;
}

/// Ratio of A(x, r, eta) against its predicted local profile near the zero
/// eta_0 of A, over the supplied grid:
///   case 1 (x = r, |x| > sqrt(-p)):  (eta - eta_0)^2 (1 + |eta|)^{-2/3}, eta_0 = x^3 + p x + q
///   case 2 (x = r = +-sqrt(-p)):     (eta - q)^2 (1 + |eta|)^{-2/3} on eta > q (resp. eta < q)
///   case 3 (x = -r, |x| = sqrt(-p)): |eta - q| (1 + |eta|)^{1/3}
/// Grid points within 1e-3 (1 + |eta_0|) of eta_0 are skipped: there A is
/// below the resolution of its defining difference.
inline SweepReport local_A_structure(const QuarticCurve &curve, double x, double r,
                                     const std::vector<double> &eta_grid) {
  const double sq = curve.sqrt_neg_p();
  const bool x_edge = detail::nearly_equal(std::abs(x), sq);
  const bool r_edge = detail::nearly_equal(std::abs(r), sq);
  int which = 0;
  if (detail::nearly_equal(x, r) && std::abs(x) > sq && !x_edge)
    which = 1;
  else if (detail::nearly_equal(x, r) && x_edge)
    which = 2;
  else if (detail::nearly_equal(x, -r) && x_edge && r_edge)
    which = 3;
  if (which == 0)
    throw WrongCase("(x, r) is not one of the three singular configurations");

  const double eta0 = which == 1 ? x * x * x + curve.p() * x + curve.q() : curve.q();
  SweepReport rep;
  rep.suite = "localA";
  rep.record("case", which);
  rep.record("eta0", eta0);
  for (double eta : eta_grid) {
    if (std::abs(eta - eta0) < 1e-3 * (1.0 + std::abs(eta0)))
      continue;
    if (which == 2 && (x > 0 ? eta <= eta0 : eta >= eta0))
      continue;
    const double d = eta - eta0;
    const double profile = which == 3
                               ? std::abs(d) * std::cbrt(1.0 + std::abs(eta))
                               : d * d / std::pow(1.0 + std::abs(eta), 2.0 / 3.0);
    rep.observe(exponent_A(curve, x, r, eta) / profile, {{"eta", eta}});
  }
  rep.pass = rep.n_samples > 0 && rep.ratio_min > 0.0 && std::isfinite(rep.ratio_max);
  return rep;
}

/// Evaluates the absolute integral for (n, m) = (0, 0) as delta -> 0+ at a
/// singular boundary pair and fits the blow-up exponent.
inline DivergenceProbe divergence_probe(const QuarticCurve &curve, double x, double r,
                                        const std::vector<double> &deltas,
                                        const NumericConfig &cfg) {
  if (!sigma_branch(curve, x, r))
    throw NotSingularPair("(x, r) is not in the singular set");
  DivergenceProbe out;
  out.deltas = deltas;
  for (double d : deltas) {
    if (!(d > 0.0))
      throw InvalidArgument("probe deltas must be > 0");
    out.s_values.push_back(abs_kernel_integral(curve, x, r, d, 0, 0, cfg));
  }
  out.strictly_increasing = true;
  for (std::size_t i = 1; i < deltas.size(); ++i) {
    const bool shrinking = deltas[i] < deltas[i - 1];
    const bool grew = out.s_values[i] > out.s_values[i - 1];
    if (shrinking != grew)
      out.strictly_increasing = false;
  }
  const std::size_t k = deltas.size();
  if (k >= 2) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < k; ++i) {
      mx += std::log(deltas[i]);
      my += std::log(out.s_values[i]);
    }
    mx /= k;
    my /= k;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const double dx = std::log(deltas[i]) - mx;
      sxy += dx * (std::log(out.s_values[i]) - my);
      sxx += dx * dx;
    }
    out.fitted_exponent = sxx > 0 ? sxy / sxx : 0.0;
  }
  return out;
}

} // namespace szego
