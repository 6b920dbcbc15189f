#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace szego {

using NamedValues = std::vector<std::pair<std::string, double>>;

/// Outcome of a property sweep: the observed range of a comparability ratio,
/// the parameters where each extreme occurred, and recorded constants.
struct SweepReport {
  std::string suite;
  std::size_t n_samples = 0;
  double ratio_min = std::numeric_limits<double>::infinity();
  double ratio_max = -std::numeric_limits<double>::infinity();
  NamedValues params_at_min;
  NamedValues params_at_max;
  NamedValues metrics;
  bool pass = false;

  void observe(double ratio, const NamedValues &params) {
    ++n_samples;
    if (ratio < ratio_min) {
      ratio_min = ratio;
      params_at_min = params;
    }
    if (ratio > ratio_max) {
      ratio_max = ratio;
      params_at_max = params;
    }
  }

  /// ratio_max / ratio_min, or +inf when the range is degenerate.
  [[nodiscard]] double spread() const {
    if (!(ratio_min > 0.0) || !std::isfinite(ratio_max))
      return std::numeric_limits<double>::infinity();
    return ratio_max / ratio_min;
  }

  void record(std::string name, double value) {
    metrics.emplace_back(std::move(name), value);
  }

  [[nodiscard]] double metric(const std::string &name) const {
    for (const auto &[k, v] : metrics)
      if (k == name)
        return v;
    return std::numeric_limits<double>::quiet_NaN();
  }
};

} // namespace szego
