#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "szego/config.hpp"

namespace szego {

/// Boundary profile b(x) = x^4/4 + p x^2/2 + q x with p < 0, which makes b
/// non-convex on (-sqrt(-p), sqrt(-p)).
class QuarticCurve {
public:
  QuarticCurve(double p, double q) : p_(p), q_(q) {
    if (!std::isfinite(p) || !(p < 0.0))
      throw InvalidArgument("curve.p must be a finite value < 0 (got " +
                            std::to_string(p) + ")");
    if (!std::isfinite(q))
      throw InvalidArgument("curve.q must be finite");
  }

  [[nodiscard]] double p() const { return p_; }
  [[nodiscard]] double q() const { return q_; }

  /// sqrt(-p): the double-tangent abscissa when q = 0, and the edge of the
  /// range of the global-argmax map in general.
  [[nodiscard]] double sqrt_neg_p() const { return std::sqrt(-p_); }

  [[nodiscard]] double b(double x) const {
    const double x2 = x * x;
    return 0.25 * x2 * x2 + 0.5 * p_ * x2 + q_ * x;
  }
  [[nodiscard]] double db(double x) const { return x * x * x + p_ * x + q_; }
  [[nodiscard]] double d2b(double x) const { return 3.0 * x * x + p_; }
  [[nodiscard]] double d3b(double x) const { return 6.0 * x; }

  /// B_eta(lambda) = eta * lambda - b(lambda).
  [[nodiscard]] double B(double eta, double lambda) const {
    return eta * lambda - b(lambda);
  }

private:
  double p_;
  double q_;
};

inline double eval_b(const QuarticCurve &curve, double x) { return curve.b(x); }

inline double eval_B(const QuarticCurve &curve, double eta, double lambda) {
  return curve.B(eta, lambda);
}

/// Two points of the closed tube domain in boundary-adapted coordinates:
///   z = (x + i y, t + i b(x) + i h),   w = (r + i s, u + i b(r) + i k).
/// h, k >= 0 are the heights above the boundary.
struct PointPair {
  double x = 0, y = 0, t = 0, h = 0;
  double r = 0, s = 0, u = 0, k = 0;

  [[nodiscard]] double delta() const { return h + k; }
  [[nodiscard]] bool on_boundary() const { return h == 0.0 && k == 0.0; }
  [[nodiscard]] bool in_closure() const { return h >= 0.0 && k >= 0.0; }

  [[nodiscard]] std::complex<double> z1() const { return {x, y}; }
  [[nodiscard]] std::complex<double> w1() const { return {r, s}; }
  [[nodiscard]] std::complex<double> z2(const QuarticCurve &c) const {
    return {t, c.b(x) + h};
  }
  [[nodiscard]] std::complex<double> w2(const QuarticCurve &c) const {
    return {u, c.b(r) + k};
  }

  /// (z, w) -> (w, z).
  [[nodiscard]] PointPair swapped() const { return {r, s, u, k, x, y, t, h}; }

  /// Builds a pair from raw complex coordinates; heights are recovered as
  /// Im z2 - b(Re z1) and may come out negative for points outside the domain.
  static PointPair from_complex(const QuarticCurve &c, std::complex<double> z1,
                                std::complex<double> z2,
                                std::complex<double> w1,
                                std::complex<double> w2) {
    return {z1.real(), z1.imag(), z2.real(), z2.imag() - c.b(z1.real()),
            w1.real(), w1.imag(), w2.real(), w2.imag() - c.b(w1.real())};
  }
};

} // namespace szego
