#include "idseg/isolate_detect.hpp"

#include <algorithm>
#include <cmath>

namespace idseg {

double threshold_value(int T, double constant) {
  return constant * std::sqrt(2.0 * std::log(static_cast<double>(T)));
}

ExpansionGrid expansion_grid_range(int lo, int hi, int lambda) {
  const int len = hi - lo + 1;
  ExpansionGrid grid;
  grid.lambda = std::min(lambda, len);
  grid.lo = lo;
  grid.hi = hi;
  const int K = (len + grid.lambda - 1) / grid.lambda;
  grid.right_points.reserve(K);
  grid.left_points.reserve(K);
  for (int j = 1; j < K; ++j) {
    grid.right_points.push_back(lo - 1 + j * grid.lambda);
    grid.left_points.push_back(hi - j * grid.lambda + 1);
  }
  grid.right_points.push_back(hi);
  grid.left_points.push_back(lo);
  return grid;
}

ExpansionGrid expansion_grid(int T, int lambda) {
  if (T < 2) throw BadLambda("grid needs T >= 2");
  if (lambda < 1 || lambda > T) throw BadLambda("lambda must be in [1, T]");
  return expansion_grid_range(1, T, lambda);
}

WorkingInterval expanding_sequences(const ExpansionGrid& grid, int s, int e) {
  if (!(grid.lo <= s && s < e && e <= grid.hi))
    throw IndexOrder("expanding_sequences requires lo <= s < e <= hi");
  WorkingInterval w;
  w.s = s;
  w.e = e;
  for (int c : grid.right_points)
    if (s < c && c < e) w.right_seq.push_back(c);
  w.right_seq.push_back(e);
  for (int c : grid.left_points)
    if (s < c && c < e) w.left_seq.push_back(c);
  w.left_seq.push_back(s);
  return w;
}

namespace {

// Tests one sub-interval; fills `out` and returns true on a crossing.
bool test_subinterval(const ContrastKernel& kernel, int s, int e, double zeta,
                      IntervalSide side, ChangePointEstimate& out) {
  if (e - s < kernel.min_span()) return false;
  const ArgmaxResult r = kernel.argmax(s, e);
  if (r.value <= zeta) return false;
  out.location = r.b;
  out.contrast_value = r.value;
  out.interval_s = s;
  out.interval_e = e;
  out.side = side;
  return true;
}

}  // namespace

std::optional<ChangePointEstimate> detect_in_interval(const ContrastKernel& kernel,
                                                      const WorkingInterval& interval,
                                                      double zeta) {
  if (zeta <= 0.0) throw BadConfig("zeta must be positive");
  const std::size_t m = std::max(interval.right_seq.size(), interval.left_seq.size());
  ChangePointEstimate est;
  for (std::size_t k = 0; k < m; ++k) {
    if (k < interval.right_seq.size() &&
        test_subinterval(kernel, interval.s, interval.right_seq[k], zeta,
                         IntervalSide::RightExpanding, est))
      return est;
    if (k < interval.left_seq.size() &&
        test_subinterval(kernel, interval.left_seq[k], interval.e, zeta,
                         IntervalSide::LeftExpanding, est))
      return est;
  }
  return std::nullopt;
}

std::vector<ChangePointEstimate> isolate_detect(const ContrastKernel& kernel, int lambda,
                                                double zeta, RestartMode mode, int lo, int hi) {
  const ExpansionGrid grid = expansion_grid_range(lo, hi, lambda);
  const auto& right = grid.right_points;
  const auto& left = grid.left_points;
  std::vector<ChangePointEstimate> found;

  int s = lo, e = hi;
  // Carried across restarts: intervals already tested are never re-examined.
  std::size_t ir = 0, il = 0;

  while (e - s >= kernel.min_span()) {
    std::size_t lir = ir, lil = il;
    bool right_terminal_done = false, left_terminal_done = false;
    bool detected = false;
    ChangePointEstimate est;
    bool right_side = false;
    int end_point = 0;

    while (!detected && (!right_terminal_done || !left_terminal_done)) {
      // One right-expanding step.
      if (!right_terminal_done) {
        while (lir < right.size() && right[lir] <= s) ++lir;  // stale, consume for good
        int c;
        if (lir < right.size() && right[lir] < e) {
          c = right[lir];
          ++lir;
        } else {
          c = e;
          right_terminal_done = true;
        }
        if (test_subinterval(kernel, s, c, zeta, IntervalSide::RightExpanding, est)) {
          detected = true;
          right_side = true;
          end_point = c;
        }
      }
      // One left-expanding step.
      if (!detected && !left_terminal_done) {
        while (lil < left.size() && left[lil] >= e) ++lil;
        int c;
        if (lil < left.size() && left[lil] > s) {
          c = left[lil];
          ++lil;
        } else {
          c = s;
          left_terminal_done = true;
        }
        if (test_subinterval(kernel, c, e, zeta, IntervalSide::LeftExpanding, est)) {
          detected = true;
          right_side = false;
          end_point = c;
        }
      }
    }

    if (!detected) break;
    found.push_back(est);
    ir = lir;
    il = lil;
    if (right_side) {
      s = (mode == RestartMode::EstimatePoint) ? est.location + 1 : end_point;
    } else {
      e = (mode == RestartMode::EstimatePoint) ? est.location : end_point;
    }
  }

  std::sort(found.begin(), found.end(),
            [](const ChangePointEstimate& a, const ChangePointEstimate& b) {
              return a.location < b.location;
            });
  found.erase(std::unique(found.begin(), found.end(),
                          [](const ChangePointEstimate& a, const ChangePointEstimate& b) {
                            return a.location == b.location;
                          }),
              found.end());
  return found;
}

std::vector<ChangePointEstimate> isolate_detect(const ContrastKernel& kernel, int lambda,
                                                double zeta, RestartMode mode) {
  return isolate_detect(kernel, lambda, zeta, mode, 1, kernel.length());
}

std::vector<ChangePointEstimate> detect_windowed(const ContrastKernel& kernel, int lambda,
                                                 double threshold_const, RestartMode mode,
                                                 int window_len, int window_trigger) {
  const int T = kernel.length();
  if (T <= window_trigger)
    return isolate_detect(kernel, lambda, threshold_value(T, threshold_const), mode);

  // Near-equal contiguous windows, each handled as an independent series.
  const int W = (T + window_len - 1) / window_len;
  const int base = T / W;
  const int rem = T % W;
  std::vector<std::vector<ChangePointEstimate>> per_window(static_cast<std::size_t>(W));
#pragma omp parallel for schedule(dynamic)
  for (int w = 0; w < W; ++w) {
    const int len = base + (w < rem ? 1 : 0);
    const int lo = w * base + std::min(w, rem) + 1;
    const int hi = lo + len - 1;
    per_window[w] = isolate_detect(kernel, lambda, threshold_value(len, threshold_const),
                                   mode, lo, hi);
  }
  std::vector<ChangePointEstimate> merged;
  for (auto& v : per_window)
    merged.insert(merged.end(), v.begin(), v.end());
  return merged;  // windows are ordered and disjoint, so already sorted
}

}  // namespace idseg
