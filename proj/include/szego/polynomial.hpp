#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <vector>

#include "szego/config.hpp"

namespace szego {

/// Dense real polynomial, coefficients in increasing degree: c[k] * x^k.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(std::initializer_list<double> c) : c_(c) { trim(); }
  explicit Polynomial(std::vector<double> c) : c_(std::move(c)) { trim(); }

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] double coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : 0.0;
  }
  [[nodiscard]] double leading() const { return c_.empty() ? 0.0 : c_.back(); }
  [[nodiscard]] const std::vector<double> &coeffs() const { return c_; }

  [[nodiscard]] double operator()(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  [[nodiscard]] Polynomial derivative() const {
    std::vector<double> d;
    for (std::size_t k = 1; k < c_.size(); ++k)
      d.push_back(static_cast<double>(k) * c_[k]);
    return Polynomial(std::move(d));
  }

  [[nodiscard]] Polynomial shifted(double level) const {
    std::vector<double> c = c_;
    if (c.empty())
      c.push_back(0.0);
    c[0] -= level;
    return Polynomial(std::move(c));
  }

  /// Even degree with positive leading coefficient, i.e. p -> +infinity.
  [[nodiscard]] bool coercive() const {
    return degree() >= 2 && degree() % 2 == 0 && leading() > 0.0;
  }

  /// Cauchy bound: every real root lies in [-R, R].
  [[nodiscard]] double root_bound() const {
    double m = 0.0;
    for (int k = 0; k < degree(); ++k)
      m = std::max(m, std::abs(c_[k] / leading()));
    return 1.0 + m;
  }

  /// Distinct real roots in [lo, hi], ascending. Roots of p' split the interval
  /// into monotone pieces, each bracketed and bisected to full precision.
  [[nodiscard]] std::vector<double> real_roots(double lo, double hi) const {
    std::vector<double> roots;
    if (degree() < 1)
      return roots;
    if (degree() == 1) {
      const double x = -c_[0] / c_[1];
      if (x >= lo && x <= hi)
        roots.push_back(x);
      return roots;
    }
    std::vector<double> pts{lo};
    for (double x : derivative().real_roots(lo, hi))
      if (x > lo && x < hi)
        pts.push_back(x);
    pts.push_back(hi);

    auto push = [&](double x) {
      if (roots.empty() || x != roots.back())
        roots.push_back(x);
    };
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      double a = pts[i], b = pts[i + 1];
      double fa = (*this)(a), fb = (*this)(b);
      if (fa == 0.0) {
        push(a);
        continue;
      }
      if (fb == 0.0 || (fa < 0.0) == (fb < 0.0))
        continue;
      push(bisect(a, b, fa));
    }
    if (!pts.empty() && (*this)(pts.back()) == 0.0)
      push(pts.back());
    // Extrema that touch zero without a sign change (double roots).
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
      const double x = pts[i];
      const double scale = magnitude(x);
      if (std::abs((*this)(x)) <= 64 * std::numeric_limits<double>::epsilon() * scale)
        roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
  }

  [[nodiscard]] std::vector<double> real_roots() const {
    const double r = root_bound();
    return real_roots(-r, r);
  }

  /// sum_k |c_k| |x|^k, the natural size for roundoff in p(x).
  [[nodiscard]] double magnitude(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * std::abs(x) + std::abs(*it);
    return acc;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0.0)
      c_.pop_back();
  }

  [[nodiscard]] double bisect(double a, double b, double fa) const {
    for (int it = 0; it < 2000; ++it) {
      const double m = 0.5 * (a + b);
      if (m <= a || m >= b)
        break;
      const double fm = (*this)(m);
      if (fm == 0.0)
        return m;
      if ((fm < 0.0) == (fa < 0.0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    return 0.5 * (a + b);
  }

  std::vector<double> c_;
};

} // namespace szego
