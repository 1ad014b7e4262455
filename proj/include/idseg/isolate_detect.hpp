#pragma once

#include <optional>
#include <vector>

#include "idseg/contrasts.hpp"
#include "idseg/core_types.hpp"

namespace idseg {

/// Detection threshold zeta = C * sqrt(2 ln T).
double threshold_value(int T, double constant);

// Right/left expansion points over a detection domain. For [1, T]:
// c_j^r = j*lambda (j < K) with c_K^r = T, and c_j^l = T - j*lambda + 1 with
// c_K^l = 1, K = ceil(T / lambda). Windows use the same construction shifted
// to their own [lo, hi].
struct ExpansionGrid {
  int lambda = 1;
  int lo = 1;
  int hi = 1;
  std::vector<int> right_points;  // strictly increasing, last = hi
  std::vector<int> left_points;   // strictly decreasing, last = lo
};

/// Grid over [1, T]. Throws BadLambda unless 1 <= lambda <= T.
ExpansionGrid expansion_grid(int T, int lambda);

/// Grid over [lo, hi]; lambda is clamped to the domain length.
ExpansionGrid expansion_grid_range(int lo, int hi, int lambda);

// The two expanding end-point sequences for the current [s, e]: right-interval
// ends (grid points in (s, e), then e) and left-interval starts (grid points
// in (s, e), then s).
struct WorkingInterval {
  int s = 0;
  int e = 0;
  std::vector<int> right_seq;
  std::vector<int> left_seq;
};

/// Sequences per the grid definition, starting at the first grid point past s
/// (resp. before e). Throws IndexOrder unless lo <= s < e <= hi.
WorkingInterval expanding_sequences(const ExpansionGrid& grid, int s, int e);

/// Scans the interleaved sequence [s, r0], [l0, e], [s, r1], [l1, e], ...
/// (right side first; the longer side finishes alone) and returns the first
/// estimate whose |contrast| strictly exceeds zeta. Sub-intervals shorter than
/// the kernel's min_span are skipped.
std::optional<ChangePointEstimate> detect_in_interval(const ContrastKernel& kernel,
                                                      const WorkingInterval& interval,
                                                      double zeta);

/// The core loop on [lo, hi]: repeatedly detect, record, and shrink [s, e]
/// until no interval crosses zeta. Restarts move s (right detections) or e
/// (left detections) to the interval end-point (IntervalEnd) or just past the
/// estimate (EstimatePoint). Expansion counters are carried across restarts,
/// so no interval is ever tested twice. Output sorted, duplicate-free.
std::vector<ChangePointEstimate> isolate_detect(const ContrastKernel& kernel, int lambda,
                                                double zeta, RestartMode mode, int lo, int hi);

/// Full-series convenience overload.
std::vector<ChangePointEstimate> isolate_detect(const ContrastKernel& kernel, int lambda,
                                                double zeta, RestartMode mode);

/// Long-signal variant: when T > window_trigger, splits [1, T] into
/// ceil(T / window_len) near-equal windows, runs isolate_detect on each as an
/// independent series (threshold from the window length), and concatenates.
/// Windows are processed in parallel. threshold_const is the C of Eq. zeta.
std::vector<ChangePointEstimate> detect_windowed(const ContrastKernel& kernel, int lambda,
                                                 double threshold_const, RestartMode mode,
                                                 int window_len, int window_trigger);

}  // namespace idseg
