#pragma once

#include <cmath>

#include "json.hpp"
#include "szego/report.hpp"

namespace szego {

namespace detail {
inline nlohmann::json finite_or_string(double v) {
  if (std::isfinite(v))
    return v;
  if (std::isnan(v))
    return "nan";
  return v > 0 ? "inf" : "-inf";
}

inline nlohmann::json to_json(const NamedValues &values) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto &[k, v] : values)
    j[k] = finite_or_string(v);
  return j;
}
} // namespace detail

/// {suite, n_samples, ratio_min, ratio_max, worst_case_params, pass, metrics}.
/// Non-finite numbers are written as the strings "inf", "-inf", "nan".
inline nlohmann::json to_json(const SweepReport &r) {
  nlohmann::json out;
  out["suite"] = r.suite;
  out["n_samples"] = r.n_samples;
  out["ratio_min"] = detail::finite_or_string(r.ratio_min);
  out["ratio_max"] = detail::finite_or_string(r.ratio_max);
  out["worst_case_params"] = {{"at_min", detail::to_json(r.params_at_min)},
                              {"at_max", detail::to_json(r.params_at_max)}};
  out["pass"] = r.pass;
  out["metrics"] = detail::to_json(r.metrics);
  return out;
}

} // namespace szego
