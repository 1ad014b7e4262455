#pragma once

#include <utility>
#include <vector>

#include "idseg/core_types.hpp"

namespace idseg {

// Cumulative tables enabling O(1) interval sums. Entry k holds the sum over
// t = 1..k, so cum_x[0] = cum_tx[0] = 0 and both have length T+1. Built with
// compensated summation to bound drift on long series.
struct PrefixTables {
  std::vector<double> cum_x;   // sum of X_t
  std::vector<double> cum_tx;  // sum of t * X_t

  double sum_x(int a, int b) const { return cum_x[b] - cum_x[a - 1]; }
  double sum_tx(int a, int b) const { return cum_tx[b] - cum_tx[a - 1]; }
};

PrefixTables build_prefix_tables(const TimeSeries& series);

/// Signed CUSUM statistic for a level shift at b within [s, e]; callers take
/// the absolute value. Requires 1 <= s <= b < e <= T.
double cusum(const PrefixTables& tables, int s, int e, int b);

/// Contrast |<X, phi_{s,e}^b>| for a slope change, in O(1) from the tables.
/// Requires s+1 <= b <= e-1.
double cplm_contrast(const PrefixTables& tables, int s, int e, int b);

/// Full contrast vector phi_{s,e}^b of length T (zero outside [s, e]).
std::vector<double> cplm_contrast_vector(int s, int e, int b, int T);

/// Unit-norm linear vector gamma_{s,e} and constant vector 1_{s,e}, both of
/// length T and zero outside [s, e].
std::pair<std::vector<double>, std::vector<double>> helper_vectors(int s, int e, int T);

struct ArgmaxResult {
  int b = 0;
  double value = 0.0;  // |contrast| at b
};

// Class-specific contrast evaluation over one series. Immutable after
// construction; concurrent queries are safe.
class ContrastKernel {
 public:
  ContrastKernel(const TimeSeries& series, SignalClass cls);

  SignalClass signal_class() const { return cls_; }
  int length() const { return T_; }
  const PrefixTables& tables() const { return tables_; }

  // Minimal e-s admitting a candidate: 1 for level shifts, 2 for slope kinks.
  int min_span() const { return cls_ == SignalClass::PiecewiseConstant ? 1 : 2; }

  /// |contrast| at b over [s, e]. Throws IndexOrder / DegenerateSpan.
  double contrast(int s, int e, int b) const;

  /// Like contrast() but returns 0 instead of throwing when (s, e, b) does not
  /// admit a candidate (skip semantics used by the solution-path passes).
  double contrast_or_zero(int s, int e, int b) const;

  /// Maximizer of |contrast| over the class-specific candidate range
  /// ([s, e-1] or [s+1, e-1]); ties broken by smallest b. OpenMP-parallel for
  /// long spans. Throws SpanTooShort when e - s < min_span().
  ArgmaxResult argmax(int s, int e) const;

  /// Plain sequential scan; reference implementation for argmax().
  ArgmaxResult argmax_serial(int s, int e) const;

 private:
  SignalClass cls_;
  int T_;
  PrefixTables tables_;
};

}  // namespace idseg
