#pragma once

// Globally adaptive Gauss-Kronrod (G7/K15) quadrature over unions of finite
// panels and mapped half-lines. Value type may be real or complex.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "szego/config.hpp"

namespace szego::quad {

struct Options {
  double rel_tol = 1e-8;
  double abs_tol = 1e-14;
  int max_depth = 60;
  int max_panels = 4000;

  static Options from(const NumericConfig &cfg) {
    return {cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions, 4000};
  }
};

template <class V> struct Result {
  V value{};
  double abs_error = 0.0;
  long evaluations = 0;
  bool converged = true;
};

/// One piece of the integration domain. Half-lines are mapped onto [0, 1)
/// with x = origin +/- scale * t / (1 - t).
struct Segment {
  enum class Kind { Finite, Right, Left };
  Kind kind = Kind::Finite;
  double a = 0.0;
  double b = 0.0;
  double origin = 0.0;
  double scale = 1.0;

  static Segment finite(double a, double b) { return {Kind::Finite, a, b, 0.0, 1.0}; }
  static Segment right(double origin, double scale = 1.0) {
    return {Kind::Right, 0.0, 1.0, origin, scale};
  }
  static Segment left(double origin, double scale = 1.0) {
    return {Kind::Left, 0.0, 1.0, origin, scale};
  }
};

namespace detail {

// Kronrod abscissae (descending, last is the centre) and weights; the Gauss
// points are the odd-indexed abscissae.
inline constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class V> struct Panel {
  double a, b;
  V value;
  double err;
  int depth;
  std::size_t segment;
};

template <class V, class G>
void gk15(G &&g, double a, double b, V &value, double &err) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const V fc = g(centre);
  V resk = fc * wgk[7];
  V resg = fc * wg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * xgk[j];
    const V f1 = g(centre - dx);
    const V f2 = g(centre + dx);
    resk += (f1 + f2) * wgk[j];
    if (j % 2 == 1)
      resg += (f1 + f2) * wg[j / 2];
  }
  value = resk * half;
  err = std::abs((resk - resg) * half);
}

} // namespace detail

/// Integrates f over the union of segments with a single global error budget.
template <class V, class F>
Result<V> integrate_segments(F &&f, const std::vector<Segment> &segments,
                             const Options &opt) {
  using detail::Panel;
  Result<V> out;
  auto mapped = [&](std::size_t si, double t) -> V {
    const Segment &s = segments[si];
    ++out.evaluations;
    switch (s.kind) {
    case Segment::Kind::Finite:
      return f(t);
    case Segment::Kind::Right: {
      const double om = 1.0 - t;
      return f(s.origin + s.scale * t / om) * (s.scale / (om * om));
    }
    case Segment::Kind::Left: {
      const double om = 1.0 - t;
      return f(s.origin - s.scale * t / om) * (s.scale / (om * om));
    }
    }
    return V{};
  };

  auto cmp = [](const Panel<V> &l, const Panel<V> &r) { return l.err < r.err; };
  std::priority_queue<Panel<V>, std::vector<Panel<V>>, decltype(cmp)> open(cmp);
  std::vector<Panel<V>> closed;

  V total{};
  double total_err = 0.0;
  for (std::size_t si = 0; si < segments.size(); ++si) {
    const Segment &s = segments[si];
    if (!(s.b > s.a))
      continue;
    Panel<V> pnl{s.a, s.b, V{}, 0.0, 0, si};
    detail::gk15<V>([&](double t) { return mapped(si, t); }, s.a, s.b, pnl.value,
                    pnl.err);
    total += pnl.value;
    total_err += pnl.err;
    open.push(pnl);
  }

  int panels = static_cast<int>(open.size());
  while (!open.empty()) {
    const double target = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
    if (!(total_err > target))
      break;
    if (!std::isfinite(std::abs(total)) || !std::isfinite(total_err)) {
      out.converged = false;
      break;
    }
    if (panels >= opt.max_panels) {
      out.converged = false;
      break;
    }
    Panel<V> worst = open.top();
    open.pop();
    if (worst.depth >= opt.max_depth) {
      out.converged = false;
      closed.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Panel<V> left{worst.a, mid, V{}, 0.0, worst.depth + 1, worst.segment};
    Panel<V> right{mid, worst.b, V{}, 0.0, worst.depth + 1, worst.segment};
    auto g = [&](double t) { return mapped(worst.segment, t); };
    detail::gk15<V>(g, left.a, left.b, left.value, left.err);
    detail::gk15<V>(g, right.a, right.b, right.value, right.err);
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    open.push(left);
    open.push(right);
    ++panels;
  }

  while (!open.empty()) {
    closed.push_back(open.top());
    open.pop();
  }
  // Fixed summation order keeps results bit-reproducible.
  std::sort(closed.begin(), closed.end(), [](const Panel<V> &l, const Panel<V> &r) {
    return l.segment != r.segment ? l.segment < r.segment : l.a < r.a;
  });
  out.value = V{};
  out.abs_error = 0.0;
  for (const auto &pnl : closed) {
    out.value += pnl.value;
    out.abs_error += pnl.err;
  }
  return out;
}

/// Finite interval split at the sorted interior breakpoints that fall in (a, b).
template <class V = double, class F>
Result<V> integrate(F &&f, double a, double b, const Options &opt,
                    const std::vector<double> &breaks = {}) {
  std::vector<double> pts{a};
  for (double x : breaks)
    if (x > a && x < b)
      pts.push_back(x);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  std::vector<Segment> segs;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    segs.push_back(Segment::finite(pts[i], pts[i + 1]));
  return integrate_segments<V>(std::forward<F>(f), segs, opt);
}

/// [a, infinity).
template <class V = double, class F>
Result<V> integrate_to_infinity(F &&f, double a, const Options &opt,
                                double scale = 1.0) {
  return integrate_segments<V>(std::forward<F>(f), {Segment::right(a, scale)}, opt);
}

/// The whole real line, with finite panels between the given breakpoints and
/// mapped tails outside them. At least one breakpoint is required.
template <class V = double, class F>
Result<V> integrate_line(F &&f, std::vector<double> breaks, const Options &opt,
                         double tail_scale = 1.0) {
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<Segment> segs;
  segs.push_back(Segment::left(breaks.front(), tail_scale));
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    segs.push_back(Segment::finite(breaks[i], breaks[i + 1]));
  segs.push_back(Segment::right(breaks.back(), tail_scale));
  return integrate_segments<V>(std::forward<F>(f), segs, opt);
}

} // namespace szego::quad
