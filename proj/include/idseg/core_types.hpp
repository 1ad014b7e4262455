#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace idseg {

// All series indices are 1-based; converters live at I/O boundaries only.
// A change-point b is the last index of the old regime: f_b != f_{b+1},
// or the slope changes between b and b+1. Valid locations are in [1, T-1].

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyInput : Error { EmptyInput() : Error("empty input series") {} };

struct NonFiniteValue : Error {
  std::size_t index;  // 1-based position of the first offender
  explicit NonFiniteValue(std::size_t i)
      : Error("non-finite value at index " + std::to_string(i)), index(i) {}
};

struct IndexOrder : Error { using Error::Error; };
struct DegenerateSpan : Error { using Error::Error; };
struct SpanTooShort : Error { using Error::Error; };
struct BadLambda : Error { using Error::Error; };
struct BadScale : Error { using Error::Error; };
struct BadDof : Error { using Error::Error; };
struct ZeroScale : Error {
  ZeroScale() : Error("noise scale estimate is zero; pass sigma explicitly") {}
};
struct UnknownModel : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct SingularFit : Error { using Error::Error; };
struct Infeasible : Error { using Error::Error; };
struct BadConfig : Error { using Error::Error; };

class TimeSeries {
 public:
  TimeSeries() = default;
  explicit TimeSeries(std::vector<double> values) : values_(std::move(values)) {}

  int length() const { return static_cast<int>(values_.size()); }
  double at(int t) const { return values_[static_cast<std::size_t>(t) - 1]; }  // t in [1, T]
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

/// Checks finiteness and non-emptiness. Throws EmptyInput or NonFiniteValue.
TimeSeries validate_series(const std::vector<double>& raw);

enum class SignalClass { PiecewiseConstant, ContinuousPiecewiseLinear };
enum class StoppingRule { Threshold, Sic, Hybrid };
enum class RestartMode { IntervalEnd, EstimatePoint };  // ID vs ID_det
enum class WindowPolicy { Auto, Off };
enum class IntervalSide { RightExpanding, LeftExpanding };

struct DetectorConfig {
  SignalClass signal_class = SignalClass::PiecewiseConstant;
  int lambda = 3;
  double threshold_const = 1.0;       // C (pcm) / C~ (cplm)
  double path_threshold_const = 0.9;  // lower constant for the overdetection pass
  StoppingRule stopping = StoppingRule::Hybrid;
  RestartMode restart_mode = RestartMode::EstimatePoint;
  double sic_alpha = 1.01;
  int hybrid_jstar = 100;
  int hybrid_lambda = 10;
  int window_len = 3000;
  int window_trigger = 12000;
  WindowPolicy window_policy = WindowPolicy::Auto;
  int ht_scale = 1;                    // block-averaging scale; 1 = off
  std::optional<double> sigma;         // nullopt = MAD estimate

  void validate() const;               // throws BadConfig on invariant violations
};

/// Calibrated defaults per signal class.
DetectorConfig default_config(SignalClass cls);

struct ChangePointEstimate {
  int location = 0;            // in [1, T-1]
  double contrast_value = 0.0; // value that crossed the threshold
  int interval_s = 0;          // detecting sub-interval
  int interval_e = 0;
  IntervalSide side = IntervalSide::RightExpanding;
};

struct DetectionResult {
  std::vector<int> change_points;  // sorted, unique
  std::vector<double> fitted;      // length T, segment-wise least squares
  double sigma_hat = 0.0;
  DetectorConfig config_echo;
  StoppingRule stopping_used = StoppingRule::Threshold;
};

// Removal ordering b = (b_1,...,b_J): b_J was removed first, b_1 last.
// M_j is the set {b_1,...,b_j}, so M_0 c M_1 c ... c M_J.
struct SolutionPath {
  std::vector<int> ordered_removals;

  int size() const { return static_cast<int>(ordered_removals.size()); }
  /// Sorted change-points of the nested model M_j.
  std::vector<int> model(int j) const;
};

}  // namespace idseg
