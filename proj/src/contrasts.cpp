#include "idseg/contrasts.hpp"

#include <cmath>
#include <limits>

namespace idseg {

PrefixTables build_prefix_tables(const TimeSeries& series) {
  const int T = series.length();
  PrefixTables tab;
  tab.cum_x.assign(static_cast<std::size_t>(T) + 1, 0.0);
  tab.cum_tx.assign(static_cast<std::size_t>(T) + 1, 0.0);
  // Kahan compensated sums keep the tables accurate on long series.
  double sx = 0.0, cx = 0.0, stx = 0.0, ctx = 0.0;
  for (int t = 1; t <= T; ++t) {
    const double x = series.at(t);
    double y = x - cx;
    double u = sx + y;
    cx = (u - sx) - y;
    sx = u;
    tab.cum_x[t] = sx;

    y = static_cast<double>(t) * x - ctx;
    u = stx + y;
    ctx = (u - stx) - y;
    stx = u;
    tab.cum_tx[t] = stx;
  }
  return tab;
}

double cusum(const PrefixTables& tables, int s, int e, int b) {
  const int T = static_cast<int>(tables.cum_x.size()) - 1;
  if (!(1 <= s && s <= b && b < e && e <= T))
    throw IndexOrder("cusum requires 1 <= s <= b < e <= T");
  const double n = static_cast<double>(e - s + 1);
  const double n1 = static_cast<double>(b - s + 1);
  const double n2 = static_cast<double>(e - b);
  const double sum_l = tables.sum_x(s, b);
  const double sum_r = tables.sum_x(b + 1, e);
  return std::sqrt(n2 / (n * n1)) * sum_l - std::sqrt(n1 / (n * n2)) * sum_r;
}

namespace {

void check_cplm_triple(int s, int e, int b, int T) {
  if (!(1 <= s && e <= T && e - s >= 2 && s <= b && b <= e))
    throw IndexOrder("cplm contrast requires 1 <= s, e <= T, e - s >= 2, s <= b <= e");
  if (b == s || b == e)
    throw DegenerateSpan("cplm contrast undefined at b = s or b = e");
}

struct CplmCoef {
  double alpha, beta, A, B, C, D;
};

// Coefficients of phi_{s,e}^b: alpha*beta*(A*t - B) on [s, b] and
// -(alpha/beta)*(C*t - D) on [b+1, e].
CplmCoef cplm_coef(int s, int e, int b) {
  const double n = static_cast<double>(e - s + 1);
  const double eb1 = static_cast<double>(e - b + 1);
  const double bs1 = static_cast<double>(b - s + 1);
  const double eb = static_cast<double>(e - b);
  const double bs = static_cast<double>(b - s);
  CplmCoef c;
  c.alpha = std::sqrt(6.0 / (n * (n * n - 1.0) * (1.0 + eb1 * bs1 + eb * bs)));
  c.beta = std::sqrt((eb1 * eb) / (bs1 * bs));
  c.A = static_cast<double>(e) + 2.0 * b - 3.0 * s + 2.0;
  c.B = static_cast<double>(b) * e + static_cast<double>(b) * s -
        2.0 * static_cast<double>(s) * s + 2.0 * s;
  c.C = 3.0 * e - 2.0 * b - static_cast<double>(s) + 2.0;
  c.D = 2.0 * static_cast<double>(e) * e + 2.0 * e - static_cast<double>(b) * e -
        static_cast<double>(b) * s;
  return c;
}

}  // namespace

double cplm_contrast(const PrefixTables& tables, int s, int e, int b) {
  const int T = static_cast<int>(tables.cum_x.size()) - 1;
  check_cplm_triple(s, e, b, T);
  const CplmCoef c = cplm_coef(s, e, b);
  // phi is linear on each piece, so <X, phi> needs four interval sums.
  const double left = c.A * tables.sum_tx(s, b) - c.B * tables.sum_x(s, b);
  const double right = c.C * tables.sum_tx(b + 1, e) - c.D * tables.sum_x(b + 1, e);
  return std::fabs(c.alpha * c.beta * left - (c.alpha / c.beta) * right);
}

std::vector<double> cplm_contrast_vector(int s, int e, int b, int T) {
  check_cplm_triple(s, e, b, T);
  const CplmCoef c = cplm_coef(s, e, b);
  std::vector<double> phi(static_cast<std::size_t>(T), 0.0);
  for (int t = s; t <= b; ++t)
    phi[t - 1] = c.alpha * c.beta * (c.A * t - c.B);
  for (int t = b + 1; t <= e; ++t)
    phi[t - 1] = -(c.alpha / c.beta) * (c.C * t - c.D);
  return phi;
}

std::pair<std::vector<double>, std::vector<double>> helper_vectors(int s, int e, int T) {
  if (!(1 <= s && s < e && e <= T))
    throw IndexOrder("helper_vectors requires 1 <= s < e <= T");
  const double n = static_cast<double>(e - s + 1);
  const double se = static_cast<double>(s) + e;
  const double norm_gamma = std::sqrt(
      (1.0 / 12.0) * n *
      (static_cast<double>(e) * e - 2.0 * static_cast<double>(e) * s + 2.0 * e +
       static_cast<double>(s) * s - 2.0 * s));
  const double val_one = 1.0 / std::sqrt(n);
  std::vector<double> gamma(static_cast<std::size_t>(T), 0.0);
  std::vector<double> ones(static_cast<std::size_t>(T), 0.0);
  for (int t = s; t <= e; ++t) {
    gamma[t - 1] = (t - se / 2.0) / norm_gamma;
    ones[t - 1] = val_one;
  }
  return {std::move(gamma), std::move(ones)};
}

ContrastKernel::ContrastKernel(const TimeSeries& series, SignalClass cls)
    : cls_(cls), T_(series.length()), tables_(build_prefix_tables(series)) {}

double ContrastKernel::contrast(int s, int e, int b) const {
  if (cls_ == SignalClass::PiecewiseConstant) return std::fabs(cusum(tables_, s, e, b));
  return cplm_contrast(tables_, s, e, b);
}

double ContrastKernel::contrast_or_zero(int s, int e, int b) const {
  if (cls_ == SignalClass::PiecewiseConstant) {
    if (!(1 <= s && s <= b && b < e && e <= T_)) return 0.0;
    return std::fabs(cusum(tables_, s, e, b));
  }
  if (!(1 <= s && e <= T_ && e - s >= 2 && s + 1 <= b && b <= e - 1)) return 0.0;
  return cplm_contrast(tables_, s, e, b);
}

namespace {

struct BestCandidate {
  double key = -1.0;  // squared statistic (pcm) or |contrast| (cplm)
  int b = std::numeric_limits<int>::max();
};

inline void take_better(BestCandidate& out, const BestCandidate& in) {
  if (in.key > out.key || (in.key == out.key && in.b < out.b)) out = in;
}

// Deterministic for any thread count: the combine is a max under a total
// order on (key, b), so the partitioning cannot change the winner.
#pragma omp declare reduction(bestcand : BestCandidate : take_better(omp_out, omp_in))

}  // namespace

ArgmaxResult ContrastKernel::argmax_serial(int s, int e) const {
  if (e - s < min_span())
    throw SpanTooShort("interval too short for a contrast candidate");
  BestCandidate best;
  if (cls_ == SignalClass::PiecewiseConstant) {
    const double cs = tables_.cum_x[s - 1];
    const double ce = tables_.cum_x[e];
    const double n = static_cast<double>(e - s + 1);
    for (int b = s; b < e; ++b) {
      const double sum_l = tables_.cum_x[b] - cs;
      const double sum_r = ce - tables_.cum_x[b];
      const double n1 = static_cast<double>(b - s + 1);
      const double n2 = static_cast<double>(e - b);
      const double d = sum_l / n1 - sum_r / n2;
      const double v2 = (n1 * n2 / n) * d * d;
      if (v2 > best.key) best = {v2, b};
    }
    return {best.b, std::sqrt(best.key)};
  }
  for (int b = s + 1; b < e; ++b) {
    const double v = cplm_contrast(tables_, s, e, b);
    if (v > best.key) best = {v, b};
  }
  return {best.b, best.key};
}

ArgmaxResult ContrastKernel::argmax(int s, int e) const {
  if (e - s < min_span())
    throw SpanTooShort("interval too short for a contrast candidate");
  const int n_cand = (cls_ == SignalClass::PiecewiseConstant) ? e - s : e - s - 1;
  if (n_cand < (1 << 14)) return argmax_serial(s, e);

  BestCandidate best;
  if (cls_ == SignalClass::PiecewiseConstant) {
    const double cs = tables_.cum_x[s - 1];
    const double ce = tables_.cum_x[e];
    const double n = static_cast<double>(e - s + 1);
#pragma omp parallel for reduction(bestcand : best) schedule(static)
    for (int b = s; b < e; ++b) {
      const double sum_l = tables_.cum_x[b] - cs;
      const double sum_r = ce - tables_.cum_x[b];
      const double n1 = static_cast<double>(b - s + 1);
      const double n2 = static_cast<double>(e - b);
      const double d = sum_l / n1 - sum_r / n2;
      const double v2 = (n1 * n2 / n) * d * d;
      take_better(best, {v2, b});
    }
    return {best.b, std::sqrt(best.key)};
  }
#pragma omp parallel for reduction(bestcand : best) schedule(static)
  for (int b = s + 1; b < e; ++b) {
    take_better(best, {cplm_contrast(tables_, s, e, b), b});
  }
  return {best.b, best.key};
}

}  // namespace idseg
