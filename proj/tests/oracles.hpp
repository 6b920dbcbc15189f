#pragma once

// Reference computations for the tests. Nothing here calls the library's
// quadrature, cubic solver or golden-section search: maxima are found by a
// grid scan refined with Brent, integrals by Boost.Math quadrature.

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <utility>

namespace oracle {

struct Curve {
  double p, q;
  double b(double x) const { return 0.25 * x * x * x * x + 0.5 * p * x * x + q * x; }
  double B(double eta, double l) const { return eta * l - b(l); }
};

/// argmax and max of f over [lo, hi]: a uniform scan followed by Brent on the
/// best cell.
inline std::pair<double, double> maximise(const std::function<double(double)> &f, double lo,
                                          double hi, int cells = 2000) {
  double best_x = lo, best = f(lo);
  for (int i = 1; i <= cells; ++i) {
    const double x = lo + (hi - lo) * i / cells;
    const double v = f(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  const double h = (hi - lo) / cells;
  const auto r = boost::math::tools::brent_find_minima(
      [&](double x) { return -f(x); }, std::max(lo, best_x - h), std::min(hi, best_x + h), 52);
  if (-r.second >= best)
    return {r.first, -r.second};
  return {best_x, best};
}

/// Global argmax of B_eta by brute force.
inline std::pair<double, double> lambda_and_b_star(const Curve &c, double eta) {
  const double R = 2.0 * (1.0 + std::sqrt(-c.p) + std::cbrt(std::abs(eta - c.q)));
  return maximise([&](double l) { return c.B(eta, l); }, -R, R);
}

inline double b_star(const Curve &c, double eta) { return lambda_and_b_star(c, eta).second; }

/// Real root of l^3 - l*(-p) - c by bisection, in the branch selected by sign.
inline double cubic_root_bisect(double p, double c, double lo, double hi) {
  auto f = [&](double l) { return l * l * l + p * l - c; };
  double flo = f(lo);
  for (int i = 0; i < 300; ++i) {
    const double m = 0.5 * (lo + hi);
    const double fm = f(m);
    if ((fm < 0) == (flo < 0)) {
      lo = m;
      flo = fm;
    } else {
      hi = m;
    }
  }
  return 0.5 * (lo + hi);
}

/// sup_eta [xi eta - b*(eta)] over a grid of eta in [-L, L], refined. b* has
/// a kink at eta = q, where the sup often sits; it is checked directly.
inline double b_star_star(const Curve &c, double xi, double L = 50.0) {
  auto f = [&](double eta) { return xi * eta - b_star(c, eta); };
  return std::max(maximise(f, -L, L, 4000).second, f(c.q));
}

template <class F> double integrate(F f, double a, double b, double tol = 1e-12) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, tol);
}

/// int_R e^{-p} for p with its minimum near `centre`, split there.
template <class F> double integrate_line(F f, double centre, double tol = 1e-12) {
  const double inf = std::numeric_limits<double>::infinity();
  return integrate(f, -inf, centre, tol) + integrate(f, centre, inf, tol);
}

/// N(eta, tau) exp(-2 tau b*(eta)) by direct quadrature of the uncentred
/// exponent 2 tau [B_eta(l) - b*] over the finite range where it exceeds -60.
inline double n_tilde_at(const Curve &c, double eta, double lam, double bs, double tau,
                         double tol) {
  auto g = [&](double l) { return 2.0 * tau * (bs - c.B(eta, l)); };
  auto f = [&](double l) { return std::exp(-g(l)); };
  auto edge = [&](double dir) {
    double d = 1.0;
    while (g(lam + dir * d) < 60.0)
      d *= 2.0;
    return lam + dir * d;
  };
  // Both local maxima of B_eta lie in [min(lam, 0) - 2, max(lam, 0) + 2].
  const double lo = std::min(edge(-1.0), std::min(lam, 0.0) - 2.0);
  const double hi = std::max(edge(+1.0), std::max(lam, 0.0) + 2.0);
  const double a = std::min(lam, 0.0), b = std::max(lam, 0.0);
  double total = integrate(f, lo, a, tol) + integrate(f, b, hi, tol);
  if (b > a)
    total += integrate(f, a, b, tol);
  return total;
}

inline double n_tilde(const Curve &c, double eta, double tau, double tol = 1e-12) {
  const auto [lam, bs] = lambda_and_b_star(c, eta);
  return n_tilde_at(c, eta, lam, bs, tau, tol);
}

inline double exponent_A(const Curve &c, double x, double r, double eta) {
  return c.b(x) + c.b(r) - eta * (x + r) + 2.0 * b_star(c, eta);
}

/// Composite fixed-order Gauss-Legendre over geometric panels
/// [0, T 2^-levels], ..., [T/4, T/2], [T/2, T], each split into `sub` pieces.
template <class V, class F> V geometric_gauss(F f, double T, int levels, int sub) {
  using G = boost::math::quadrature::gauss<double, 20>;
  V total{};
  double hi = T;
  for (int j = 0; j <= levels; ++j) {
    const double lo = j == levels ? 0.0 : 0.5 * hi;
    for (int i = 0; i < sub; ++i)
      total += G::integrate(f, lo + (hi - lo) * i / sub, lo + (hi - lo) * (i + 1) / sub);
    hi = lo;
  }
  return total;
}

/// Absolute integral (n = m = 0) with the closed-form envelope tau-integral.
/// Geometric panels on each side of eta_split reach down to 2^-40 and out to
/// 2^20, beyond which the |eta|^{-3} tail is below 1e-12.
inline double abs_integral(const Curve &c, double x, double r, double delta, double eta_split) {
  auto f = [&](double eta) {
    const auto [lam, bs] = lambda_and_b_star(c, eta);
    const double s = delta + c.b(x) + c.b(r) - eta * (x + r) + 2.0 * bs;
    const double c13 = std::cbrt(std::abs(lam));
    const double c12 = std::sqrt(std::max(0.0, 3.0 * lam * lam + c.p));
    return std::tgamma(2.25) / std::pow(s, 2.25) +
           c13 * std::tgamma(2.0 + 1.0 / 3.0) / std::pow(s, 2.0 + 1.0 / 3.0) +
           c12 * std::tgamma(2.5) / std::pow(s, 2.5);
  };
  auto right = [&](double e) { return f(eta_split + e); };
  auto left = [&](double e) { return f(eta_split - e); };
  return geometric_gauss<double>(right, std::ldexp(1.0, 20), 60, 4) +
         geometric_gauss<double>(left, std::ldexp(1.0, 20), 60, 4);
}

/// S(z, w) with unit constant as a triple integral over eta, tau and lambda,
/// all by non-adaptive composite rules (`refine` multiplies the panel count).
/// tau is truncated where the damping exceeds e^{-45}; eta at |eta| = 2048,
/// where the integrand has decayed like |eta|^{-3} to a relative tail of
/// about 1e-7.
inline std::complex<double> szego_3d(const Curve &c, double x, double y, double t, double h,
                                     double r, double s, double u, double k, int refine = 1) {
  using cplx = std::complex<double>;
  const double delta = h + k;
  auto outer = [&](double eta) -> cplx {
    const auto [lam, bs] = lambda_and_b_star(c, eta);
    const double damp = delta + c.b(x) + c.b(r) - eta * (x + r) + 2.0 * bs;
    const double omega = eta * (y - s) + (t - u);
    auto inner = [&](double tau) -> cplx {
      if (tau <= 0)
        return 0.0;
      const double mag = tau * std::exp(-tau * damp) / n_tilde_at(c, eta, lam, bs, tau, 1e-11);
      return mag * cplx{std::cos(tau * omega), std::sin(tau * omega)};
    };
    return geometric_gauss<cplx>(inner, 45.0 / damp, 14, 2 * refine);
  };
  // The kink of b* at eta = q is a panel edge.
  auto right = [&](double e) { return outer(c.q + e); };
  auto left = [&](double e) { return outer(c.q - e); };
  return geometric_gauss<cplx>(right, 2048.0, 16, 2 * refine) +
         geometric_gauss<cplx>(left, 2048.0, 16, 2 * refine);
}

} // namespace oracle
