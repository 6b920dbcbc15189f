#pragma once

// Critical points of B_eta(lambda) = eta*lambda - b(lambda), the global-argmax
// map lambda(eta), the Legendre transform b* and the biconjugate b**.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "szego/config.hpp"
#include "szego/curve.hpp"

namespace szego {

enum class Regime { SingleMax, TwoMaxPlusDominant, TwoMaxMinusDominant, Tie };

inline const char *to_string(Regime r) {
  switch (r) {
  case Regime::SingleMax:
    return "SingleMax";
  case Regime::TwoMaxPlusDominant:
    return "TwoMaxPlusDominant";
  case Regime::TwoMaxMinusDominant:
    return "TwoMaxMinusDominant";
  case Regime::Tie:
    return "Tie";
  }
  return "?";
}

/// Real roots of B'_eta, i.e. of lambda^3 + p lambda - (eta - q) = 0, labelled
/// as the local maxima lambda_- < lambda_+ and the local minimum between them.
struct CriticalStructure {
  Regime regime = Regime::SingleMax;
  std::optional<double> lambda_minus;
  std::optional<double> lambda_plus;
  std::optional<double> lambda_middle;
};

struct LegendreValue {
  double eta = 0.0;
  double lambda_of_eta = 0.0;
  double b_star = 0.0;
};

namespace detail {

inline double polish_cubic_root(double lambda, double p, double c) {
  const double f = lambda * lambda * lambda + p * lambda - c;
  const double df = 3.0 * lambda * lambda + p;
  if (df == 0.0)
    return lambda;
  return lambda - f / df;
}

/// True iff lambda^3 + p lambda - c has three distinct real roots (p < 0).
inline bool three_real_roots(double p, double c) {
  const double mp = -p;
  return 4.0 * mp * mp * mp > 27.0 * c * c;
}

/// The single real root of lambda^3 + p lambda - c when 4(-p)^3 <= 27 c^2
/// that is a simple root. Cardano with the non-cancelling branch.
inline double cardano_root(double p, double c) {
  const double half = 0.5 * c;
  const double third = p / 3.0;
  const double disc = std::max(0.0, half * half + third * third * third);
  const double s = std::sqrt(disc);
  const double big = half >= 0.0 ? half + s : half - s;
  const double u = std::cbrt(big);
  const double v = u == 0.0 ? 0.0 : -third / u;
  return polish_cubic_root(u + v, p, c);
}

/// Three real roots, ascending, by the trigonometric method.
inline std::array<double, 3> trig_roots(double p, double c) {
  const double m = 2.0 * std::sqrt(-p / 3.0);
  double arg = (3.0 * c / (2.0 * p)) * std::sqrt(-3.0 / p);
  // cos(3 theta) = -arg for lambda = m cos(theta) solving l^3 + p l - c = 0.
  arg = std::clamp(-arg, -1.0, 1.0);
  const double theta = std::acos(arg) / 3.0;
  std::array<double, 3> r{};
  for (int k = 0; k < 3; ++k)
    r[k] = polish_cubic_root(m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0),
                             p, c);
  std::sort(r.begin(), r.end());
  return r;
}

} // namespace detail

inline CriticalStructure critical_points(const QuarticCurve &curve, double eta) {
  const double p = curve.p();
  const double c = eta - curve.q();
  CriticalStructure cs;
  if (c == 0.0) {
    cs.regime = Regime::Tie;
    cs.lambda_minus = -curve.sqrt_neg_p();
    cs.lambda_middle = 0.0;
    cs.lambda_plus = curve.sqrt_neg_p();
    return cs;
  }
  if (!detail::three_real_roots(p, c)) {
    // Includes the discriminant boundary, where the double root is an
    // inflection of B_eta rather than an extremum.
    cs.regime = Regime::SingleMax;
    const double root = detail::cardano_root(p, c);
    if (c > 0.0)
      cs.lambda_plus = root;
    else
      cs.lambda_minus = root;
    return cs;
  }
  const auto r = detail::trig_roots(p, c);
  cs.regime = c > 0.0 ? Regime::TwoMaxPlusDominant : Regime::TwoMaxMinusDominant;
  cs.lambda_minus = r[0];
  cs.lambda_middle = r[1];
  cs.lambda_plus = r[2];
  return cs;
}

/// Location of the global maximum of B_eta; at the tie eta = q the two maxima
/// are +-sqrt(-p) and +sqrt(-p) is returned.
inline double lambda_of_eta(const QuarticCurve &curve, double eta) {
  const double c = eta - curve.q();
  if (c == 0.0)
    return curve.sqrt_neg_p();
  const double p = curve.p();
  if (!detail::three_real_roots(p, c))
    return detail::cardano_root(p, c);
  const auto r = detail::trig_roots(p, c);
  return c > 0.0 ? r[2] : r[0];
}

inline double b_star(const QuarticCurve &curve, double eta) {
  return curve.B(eta, lambda_of_eta(curve, eta));
}

inline LegendreValue legendre_value(const QuarticCurve &curve, double eta) {
  const double lam = lambda_of_eta(curve, eta);
  return {eta, lam, curve.B(eta, lam)};
}

struct ConjugateMax {
  double value = 0.0;  ///< b**(xi)
  double argmax = 0.0; ///< eta attaining sup [xi*eta - b*(eta)]
};

/// sup_eta [xi*eta - b*(eta)] by golden-section search on the concave map.
/// Its maximiser is also the minimiser of eta -> A(x, r, eta) at xi = (x+r)/2.
inline ConjugateMax b_star_star_max(const QuarticCurve &curve, double xi) {
  const double L = std::max(2.0 * std::abs(curve.q()) + 10.0,
                            4.0 * std::pow(std::abs(xi) + 1.0, 3));
  auto f = [&](double eta) { return xi * eta - b_star(curve, eta); };
  double lo = -L, hi = L;
  const double width = 1e-12 * (1.0 + 2.0 * L);
  constexpr double invphi = 0.6180339887498948482;
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 400 && hi - lo > width; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = f(x1);
    }
  }
  ConjugateMax best{f1, x1};
  if (f2 > best.value)
    best = {f2, x2};
  // The kink of b* sits at eta = q; probe it exactly.
  const double at_q = f(curve.q());
  if (at_q >= best.value)
    best = {at_q, curve.q()};
  if (best.argmax <= -L + 2 * width || best.argmax >= L - 2 * width)
    throw BracketFailure("b** search hit the bracket edge at xi = " +
                         std::to_string(xi));
  return best;
}

inline double b_star_star(const QuarticCurve &curve, double xi) {
  return b_star_star_max(curve, xi).value;
}

} // namespace szego
