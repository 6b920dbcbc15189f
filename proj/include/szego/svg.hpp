#pragma once

// Minimal static SVG rendering for plot data: line charts and heatmaps with
// labelled axes. No external renderer.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace szego::svg {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct LineChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::vector<Series> series;
};

struct Heatmap {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::string value_label;
  std::vector<double> x;                ///< column coordinates
  std::vector<double> y;                ///< row coordinates
  std::vector<std::vector<double>> z;   ///< z[row][col]
};

namespace detail {

inline constexpr double width = 640, height = 480;
inline constexpr double left = 80, right = 110, top = 40, bottom = 60;

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

inline std::string escape(const std::string &s) {
  std::string out;
  for (char c : s) {
    switch (c) {
    case '<': out += "&lt;"; break;
    case '>': out += "&gt;"; break;
    case '&': out += "&amp;"; break;
    case '"': out += "&quot;"; break;
    default: out += c;
    }
  }
  return out;
}

struct Axis {
  double lo, hi;
  bool log;
  double map(double v, double a, double b) const {
    const double t = log ? (std::log10(v) - lo) / (hi - lo) : (v - lo) / (hi - lo);
    return a + t * (b - a);
  }
  double label_value(double t) const {
    const double v = lo + t * (hi - lo);
    return log ? std::pow(10.0, v) : v;
  }
};

inline Axis make_axis(const std::vector<const std::vector<double> *> &data, bool log) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto *d : data)
    for (double v : *d) {
      if (!std::isfinite(v) || (log && !(v > 0.0)))
        continue;
      const double w = log ? std::log10(v) : v;
      lo = std::min(lo, w);
      hi = std::max(hi, w);
    }
  if (!std::isfinite(lo)) {
    lo = 0.0;
    hi = 1.0;
  }
  if (hi == lo) {
    lo -= 0.5;
    hi += 0.5;
  }
  return {lo, hi, log};
}

inline void frame(std::ostringstream &o, const std::string &title, const std::string &xl,
                  const std::string &yl, const Axis &ax, const Axis &ay) {
  const double x0 = left, x1 = width - right, y0 = height - bottom, y1 = top;
  o << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
    << "\" fill=\"white\"/>\n";
  o << "<rect x=\"" << x0 << "\" y=\"" << y1 << "\" width=\"" << x1 - x0 << "\" height=\""
    << y0 - y1 << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double t = i / 4.0;
    const double px = x0 + t * (x1 - x0), py = y0 + t * (y1 - y0);
    o << "<line x1=\"" << px << "\" y1=\"" << y0 << "\" x2=\"" << px << "\" y2=\"" << y0 + 5
      << "\" stroke=\"black\"/>\n";
    o << "<text x=\"" << px << "\" y=\"" << y0 + 18
      << "\" font-size=\"11\" text-anchor=\"middle\">" << num(ax.label_value(t)) << "</text>\n";
    o << "<line x1=\"" << x0 - 5 << "\" y1=\"" << py << "\" x2=\"" << x0 << "\" y2=\"" << py
      << "\" stroke=\"black\"/>\n";
    o << "<text x=\"" << x0 - 8 << "\" y=\"" << py + 4
      << "\" font-size=\"11\" text-anchor=\"end\">" << num(ay.label_value(t)) << "</text>\n";
  }
  o << "<text x=\"" << 0.5 * (x0 + x1) << "\" y=\"" << height - 15
    << "\" font-size=\"13\" text-anchor=\"middle\">" << escape(xl) << "</text>\n";
  o << "<text x=\"18\" y=\"" << 0.5 * (y0 + y1) << "\" font-size=\"13\" text-anchor=\"middle\" "
    << "transform=\"rotate(-90 18 " << 0.5 * (y0 + y1) << ")\">" << escape(yl) << "</text>\n";
  o << "<text x=\"" << 0.5 * width << "\" y=\"24\" font-size=\"15\" text-anchor=\"middle\">"
    << escape(title) << "</text>\n";
}

inline std::string open() {
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
    << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  return o.str();
}

/// Blue -> white -> red diverging ramp for t in [0, 1].
inline std::string colour(double t) {
  t = std::clamp(t, 0.0, 1.0);
  int r, g, b;
  if (t < 0.5) {
    const double s = t / 0.5;
    r = static_cast<int>(40 + s * 215);
    g = static_cast<int>(80 + s * 175);
    b = 255;
  } else {
    const double s = (t - 0.5) / 0.5;
    r = 255;
    g = static_cast<int>(255 - s * 205);
    b = static_cast<int>(255 - s * 215);
  }
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

} // namespace detail

inline std::string render(const LineChart &chart) {
  using namespace detail;
  std::vector<const std::vector<double> *> xs, ys;
  for (const auto &s : chart.series) {
    xs.push_back(&s.x);
    ys.push_back(&s.y);
  }
  const Axis ax = make_axis(xs, chart.log_x), ay = make_axis(ys, chart.log_y);
  std::ostringstream o;
  o << open();
  frame(o, chart.title, chart.x_label, chart.y_label, ax, ay);
  static const char *palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  int idx = 0;
  for (const auto &s : chart.series) {
    const char *col = palette[idx % 5];
    std::ostringstream pts;
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i]))
        continue;
      if ((chart.log_x && !(s.x[i] > 0)) || (chart.log_y && !(s.y[i] > 0)))
        continue;
      pts << ax.map(s.x[i], left, width - right) << ','
          << ay.map(s.y[i], height - bottom, top) << ' ';
    }
    o << "<polyline fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.5\" points=\""
      << pts.str() << "\"/>\n";
    o << "<text x=\"" << width - right + 8 << "\" y=\"" << top + 16 * (idx + 1)
      << "\" font-size=\"12\" fill=\"" << col << "\">" << escape(s.label) << "</text>\n";
    ++idx;
  }
  o << "</svg>\n";
  return o.str();
}

inline std::string render(const Heatmap &map) {
  using namespace detail;
  const Axis ax = make_axis({&map.x}, false), ay = make_axis({&map.y}, false);
  double zlo = std::numeric_limits<double>::infinity(), zhi = -zlo;
  for (const auto &row : map.z)
    for (double v : row)
      if (std::isfinite(v)) {
        zlo = std::min(zlo, v);
        zhi = std::max(zhi, v);
      }
  if (!std::isfinite(zlo)) {
    zlo = 0.0;
    zhi = 1.0;
  }
  if (zhi == zlo)
    zhi = zlo + 1.0;

  std::ostringstream o;
  o << open();
  const double x0 = left, x1 = width - right, y0 = height - bottom, y1 = top;
  const std::size_t nc = map.x.size(), nr = map.y.size();
  const double cw = nc ? (x1 - x0) / nc : 0.0, ch = nr ? (y0 - y1) / nr : 0.0;
  o << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
    << "\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < nr && i < map.z.size(); ++i)
    for (std::size_t j = 0; j < nc && j < map.z[i].size(); ++j) {
      const double v = map.z[i][j];
      const std::string fill = std::isfinite(v) ? colour((v - zlo) / (zhi - zlo)) : "#000000";
      o << "<rect x=\"" << x0 + j * cw << "\" y=\"" << y0 - (i + 1) * ch << "\" width=\""
        << cw + 0.05 << "\" height=\"" << ch + 0.05 << "\" fill=\"" << fill << "\"/>\n";
    }
  // The frame is drawn after the cells so ticks and labels stay on top.
  frame(o, map.title, map.x_label, map.y_label, ax, ay);
  for (int i = 0; i <= 20; ++i) {
    const double t = i / 20.0;
    o << "<rect x=\"" << x1 + 20 << "\" y=\"" << y0 - (t + 0.05) * (y0 - y1) * 0.95
      << "\" width=\"16\" height=\"" << (y0 - y1) * 0.05 << "\" fill=\"" << colour(t)
      << "\"/>\n";
  }
  o << "<text x=\"" << x1 + 40 << "\" y=\"" << y0 << "\" font-size=\"10\">" << num(zlo)
    << "</text>\n";
  o << "<text x=\"" << x1 + 40 << "\" y=\"" << y1 + 10 << "\" font-size=\"10\">" << num(zhi)
    << "</text>\n";
  o << "<text x=\"" << x1 + 20 << "\" y=\"" << y1 - 6 << "\" font-size=\"11\">"
    << escape(map.value_label) << "</text>\n";
  o << "</svg>\n";
  return o.str();
}

} // namespace szego::svg
