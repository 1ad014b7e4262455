#include "idseg/core_types.hpp"

#include <algorithm>
#include <cmath>

namespace idseg {

TimeSeries validate_series(const std::vector<double>& raw) {
  if (raw.empty()) throw EmptyInput();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!std::isfinite(raw[i])) throw NonFiniteValue(i + 1);
  }
  return TimeSeries(raw);
}

void DetectorConfig::validate() const {
  if (lambda < 1) throw BadConfig("lambda must be >= 1");
  if (threshold_const <= 0.0) throw BadConfig("threshold_const must be positive");
  if (path_threshold_const <= 0.0) throw BadConfig("path_threshold_const must be positive");
  if (sic_alpha <= 1.0) throw BadConfig("sic_alpha must be > 1");
  if (hybrid_jstar < 1) throw BadConfig("hybrid_jstar must be >= 1");
  if (hybrid_lambda < 1) throw BadConfig("hybrid_lambda must be >= 1");
  if (window_len < 2) throw BadConfig("window_len must be >= 2");
  if (window_len > window_trigger) throw BadConfig("window_len must not exceed window_trigger");
  if (ht_scale < 1) throw BadConfig("ht_scale must be >= 1");
  if (sigma && *sigma <= 0.0) throw BadConfig("sigma must be positive");
}

DetectorConfig default_config(SignalClass cls) {
  DetectorConfig cfg;
  cfg.signal_class = cls;
  if (cls == SignalClass::ContinuousPiecewiseLinear) {
    cfg.threshold_const = 1.4;
    cfg.path_threshold_const = 1.25;
  }
  return cfg;
}

std::vector<int> SolutionPath::model(int j) const {
  std::vector<int> cps(ordered_removals.begin(), ordered_removals.begin() + j);
  std::sort(cps.begin(), cps.end());
  return cps;
}

}  // namespace idseg
