#include "qrconf/tail_estimate.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qrconf {

std::pair<Real, Real> extrapolate_reciprocal(const std::vector<std::pair<int, Real>>& samples)
{
  if (samples.empty()) {
    throw std::invalid_argument("no samples to extrapolate");
  }
  const std::size_t n = samples.size();
  if (n == 1) {
    return {samples[0].second, abs_of(samples[0].second)};
  }
  std::vector<Real> x(n);
  std::vector<Real> p(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = Real(1) / Real(samples[i].first);
    p[i] = samples[i].second;
  }
  // After pass m, p[i] holds the degree-m interpolant through x[i..i+m] at 0.
  Real previous_top = p[n - 1];
  for (std::size_t m = 1; m < n; ++m) {
    previous_top = p[n - m];
    for (std::size_t i = 0; i + m < n; ++i) {
      p[i] = (x[i + m] * p[i] - x[i] * p[i + 1]) / (x[i + m] - x[i]);
    }
  }
  return {p[0], abs_of(p[0] - previous_top)};
}

namespace {

// Fit in long double relative to the last sample; the residual range is small.
long double lsq_limit(const std::vector<std::pair<int, long double>>& pts, int basis)
{
  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  Mat a(static_cast<Eigen::Index>(pts.size()), basis);
  Vec b(static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const long double m = pts[i].first;
    const long double lg = std::log(m);
    const long double f[] = {1.0L, lg / m, 1.0L / m, lg / (m * m), 1.0L / (m * m), lg / (m * m * m), 1.0L / (m * m * m)};
    for (int j = 0; j < basis; ++j) {
      a(static_cast<Eigen::Index>(i), j) = f[j];
    }
    b(static_cast<Eigen::Index>(i)) = pts[i].second;
  }
  const Vec x = a.colPivHouseholderQr().solve(b);
  return x(0);
}

}  // namespace

std::pair<Real, Real> extrapolate_log_reciprocal(const std::vector<std::pair<int, Real>>& samples)
{
  if (samples.empty()) {
    throw std::invalid_argument("no samples to extrapolate");
  }
  const int top = samples.back().first;
  const Real ref = samples.back().second;
  std::vector<std::pair<int, long double>> upper;
  std::vector<std::pair<int, long double>> half;
  for (const auto& [m, v] : samples) {
    if (4 * m >= top) {
      upper.emplace_back(m, static_cast<long double>(v - ref));
    }
    if (2 * m >= top) {
      half.emplace_back(m, static_cast<long double>(v - ref));
    }
  }
  const int n = static_cast<int>(half.size());
  if (n < 4) {
    return extrapolate_reciprocal(samples);
  }
  const int basis = std::min(7, n - 2);
  const long double main = lsq_limit(half, basis);
  const long double wide = lsq_limit(upper, std::min(7, static_cast<int>(upper.size()) - 2));
  const long double spread = std::abs(main - wide);
  return {ref + Real(main), Real(spread)};
}

void check_ladder(const std::vector<int>& cutoffs)
{
  if (cutoffs.empty()) {
    throw std::invalid_argument("empty cutoff ladder");
  }
  for (std::size_t i = 0; i < cutoffs.size(); ++i) {
    if (cutoffs[i] <= 0 || (i > 0 && cutoffs[i] <= cutoffs[i - 1])) {
      throw std::invalid_argument("cutoff ladder must be positive and strictly increasing");
    }
  }
}

template <class S>
TailEstimate<S> make_tail_estimate(std::vector<std::pair<int, S>> partial_sums, double shrink)
{
  TailEstimate<S> t;
  t.partial_sums = std::move(partial_sums);
  std::vector<std::pair<int, Real>> samples;
  samples.reserve(t.partial_sums.size());
  for (const auto& [c, s] : t.partial_sums) {
    samples.emplace_back(c, to_real(s));
  }
  const std::size_t n = samples.size();
  if (n >= 3) {
    const Real prev = abs_of(samples[n - 2].second - samples[n - 3].second);
    const Real last = abs_of(samples[n - 1].second - samples[n - 2].second);
    const Real scale = abs_of(samples[n - 1].second) + 1;
    if (last > real_zero_threshold() * scale && last * Real(shrink) > prev) {
      t.diverges = true;
    }
  }
  if (t.diverges) {
    t.extrapolated = samples.back().second;
    t.error_bound = std::numeric_limits<Real>::infinity();
    return t;
  }
  auto [limit, err] = extrapolate_reciprocal(samples);
  t.extrapolated = limit;
  t.error_bound = err;
  return t;
}

template <class S>
TailEstimate<S> make_contraction_estimate(const std::vector<std::pair<int, S>>& every, const std::vector<int>& ladder)
{
  std::vector<std::pair<int, S>> kept;
  std::vector<std::pair<int, Real>> samples;
  for (const auto& [m, s] : every) {
    if (std::binary_search(ladder.begin(), ladder.end(), m)) {
      kept.emplace_back(m, s);
    }
    samples.emplace_back(m, to_real(s));
  }
  // Increments of a log(M)/M tail shrink by 2 only asymptotically.
  TailEstimate<S> t = make_tail_estimate(std::move(kept), 1.2);
  if (!t.diverges && !samples.empty()) {
    auto [limit, err] = extrapolate_log_reciprocal(samples);
    t.extrapolated = limit;
    t.error_bound = err;
  }
  return t;
}

template <class S>
TailEstimate<S> trace_band0(const GradedOperator<S>& op, const std::vector<int>& cutoffs)
{
  check_ladder(cutoffs);
  if (cutoffs.back() - 1 > op.valid_hi()) {
    throw WindowExceeded("cutoff " + std::to_string(cutoffs.back()) + " exceeds window [0, " +
                         std::to_string(op.valid_hi()) + "]");
  }
  std::vector<std::pair<int, S>> sums;
  S acc = from_int<S>(0);
  auto it = op.bands().find(0);
  int k = 0;
  for (int c : cutoffs) {
    if (it != op.bands().end()) {
      const auto& a = it->second.a;
      for (; k < c; ++k) {
        acc += a[static_cast<std::size_t>(k)];
      }
    }
    sums.emplace_back(c, acc);
  }
  return make_tail_estimate(std::move(sums));
}

template <class S>
TailEstimate<S> hs_norm_sq(const GradedOperator<S>& op, const NormTable<S>& table, const std::vector<int>& cutoffs)
{
  check_ladder(cutoffs);
  if (!table.weight().unitarizable) {
    throw DegenerateWeight("Hilbert-Schmidt norm needs a positive-definite form (h > 0)");
  }
  if (cutoffs.back() - 1 > op.valid_hi()) {
    throw WindowExceeded("cutoff " + std::to_string(cutoffs.back()) + " exceeds window [0, " +
                         std::to_string(op.valid_hi()) + "]");
  }
  if (table.order() < op.order()) {
    throw DimensionMismatch("norm table shorter than operator");
  }
  // Column-major accumulation so each cutoff sees complete columns.
  std::vector<S> column(static_cast<std::size_t>(cutoffs.back()), from_int<S>(0));
  for (const auto& [d, b] : op.bands()) {
    S ratio = table.ratio(b.lo, b.lo + d);
    for (int k = b.lo; k <= b.hi() && k < cutoffs.back(); ++k) {
      if (k > b.lo) {
        ratio = ratio * table.step(k + d) / table.step(k);
      }
      const S& x = b.a[static_cast<std::size_t>(k - b.lo)];
      if (!is_zero(x)) {
        column[static_cast<std::size_t>(k)] += x * x * ratio;
      }
    }
  }
  std::vector<std::pair<int, S>> sums;
  S acc = from_int<S>(0);
  int k = 0;
  for (int c : cutoffs) {
    for (; k < c; ++k) {
      acc += column[static_cast<std::size_t>(k)];
    }
    sums.emplace_back(c, acc);
  }
  return make_tail_estimate(std::move(sums));
}

template TailEstimate<Rational> make_tail_estimate(std::vector<std::pair<int, Rational>>, double);
template TailEstimate<Real> make_tail_estimate(std::vector<std::pair<int, Real>>, double);
template TailEstimate<Rational> make_contraction_estimate(const std::vector<std::pair<int, Rational>>&,
                                                         const std::vector<int>&);
template TailEstimate<Real> make_contraction_estimate(const std::vector<std::pair<int, Real>>&, const std::vector<int>&);
template TailEstimate<Rational> trace_band0(const GradedOperator<Rational>&, const std::vector<int>&);
template TailEstimate<Real> trace_band0(const GradedOperator<Real>&, const std::vector<int>&);
template TailEstimate<Rational> hs_norm_sq(const GradedOperator<Rational>&, const NormTable<Rational>&,
                                           const std::vector<int>&);
template TailEstimate<Real> hs_norm_sq(const GradedOperator<Real>&, const NormTable<Real>&, const std::vector<int>&);

}  // namespace qrconf
