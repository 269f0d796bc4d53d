#include "qrconf/graded_operator.hpp"

#include <algorithm>
#include <string>

namespace qrconf {

template <class S>
GradedOperator<S>::GradedOperator(int order) : order_(order), valid_hi_(order)
{
  if (order < 0) {
    throw DimensionMismatch("negative truncation order");
  }
}

template <class S>
GradedOperator<S> GradedOperator<S>::identity(int order)
{
  GradedOperator op(order);
  auto& b = op.band(0);
  std::fill(b.a.begin(), b.a.end(), from_int<S>(1));
  return op;
}

template <class S>
int GradedOperator<S>::max_band() const
{
  return bands_.empty() ? 0 : bands_.rbegin()->first;
}

template <class S>
int GradedOperator<S>::min_band() const
{
  return bands_.empty() ? 0 : bands_.begin()->first;
}

template <class S>
S GradedOperator<S>::coeff(int d, int k) const
{
  auto it = bands_.find(d);
  if (it == bands_.end() || k < it->second.lo || k > it->second.hi()) {
    return from_int<S>(0);
  }
  return it->second.a[static_cast<std::size_t>(k - it->second.lo)];
}

template <class S>
typename GradedOperator<S>::Band& GradedOperator<S>::band(int d)
{
  auto it = bands_.find(d);
  if (it != bands_.end()) {
    return it->second;
  }
  const int lo = column_lo(order_, d);
  const int hi = column_hi(order_, d);
  if (hi < lo) {
    throw WindowExceeded("band " + std::to_string(d) + " does not fit in order " + std::to_string(order_));
  }
  Band b;
  b.lo = lo;
  b.a.assign(static_cast<std::size_t>(hi - lo + 1), from_int<S>(0));
  return bands_.emplace(d, std::move(b)).first->second;
}

template <class S>
void GradedOperator<S>::set(int d, int k, S value)
{
  auto& b = band(d);
  if (k < b.lo || k > b.hi()) {
    throw WindowExceeded("column " + std::to_string(k) + " not storable in band " + std::to_string(d));
  }
  b.a[static_cast<std::size_t>(k - b.lo)] = std::move(value);
}

template <class S>
void GradedOperator<S>::prune()
{
  for (auto it = bands_.begin(); it != bands_.end();) {
    const auto& a = it->second.a;
    const bool zero = std::all_of(a.begin(), a.end(), [](const S& x) { return qrconf::is_zero(x); });
    it = zero ? bands_.erase(it) : std::next(it);
  }
}

namespace {

template <class S>
void check_orders(const GradedOperator<S>& a, const GradedOperator<S>& b)
{
  if (a.order() != b.order()) {
    throw DimensionMismatch("operators of truncation orders " + std::to_string(a.order()) + " and " +
                            std::to_string(b.order()));
  }
}

template <class S>
GradedOperator<S> add_scaled(const GradedOperator<S>& a, const GradedOperator<S>& b, const S& c)
{
  check_orders(a, b);
  GradedOperator<S> r = a;
  for (const auto& [d, bb] : b.bands()) {
    auto& rb = r.band(d);
    for (std::size_t i = 0; i < bb.a.size(); ++i) {
      if (!is_zero(bb.a[i])) {
        rb.a[i] += c * bb.a[i];
      }
    }
  }
  r.set_valid_hi(std::min(a.valid_hi(), b.valid_hi()));
  r.prune();
  return r;
}

}  // namespace

template <class S>
GradedOperator<S> operator+(const GradedOperator<S>& a, const GradedOperator<S>& b)
{
  return add_scaled(a, b, from_int<S>(1));
}

template <class S>
GradedOperator<S> operator-(const GradedOperator<S>& a, const GradedOperator<S>& b)
{
  return add_scaled(a, b, from_int<S>(-1));
}

template <class S>
GradedOperator<S> operator*(const S& c, const GradedOperator<S>& a)
{
  GradedOperator<S> r(a.order());
  r.set_valid_hi(a.valid_hi());
  if (is_zero(c)) {
    return r;
  }
  for (const auto& [d, ab] : a.bands()) {
    auto& rb = r.band(d);
    for (std::size_t i = 0; i < ab.a.size(); ++i) {
      rb.a[i] = c * ab.a[i];
    }
  }
  return r;
}

template <class S>
GradedOperator<S> operator*(const GradedOperator<S>& a, const GradedOperator<S>& b)
{
  check_orders(a, b);
  const int n = a.order();
  GradedOperator<S> r(n);
  for (const auto& [db, bb] : b.bands()) {
    for (const auto& [da, ab] : a.bands()) {
      const int d = da + db;
      if (GradedOperator<S>::column_hi(n, d) < GradedOperator<S>::column_lo(n, d)) {
        continue;
      }
      // z^k -> b z^{k+db} -> a z^{k+db+da}; the middle degree must be stored in a.
      const int k_lo = std::max(bb.lo, ab.lo - db);
      const int k_hi = std::min(bb.hi(), ab.hi() - db);
      if (k_hi < k_lo) {
        continue;
      }
      auto& rb = r.band(d);
      for (int k = k_lo; k <= k_hi; ++k) {
        const S& x = bb.a[static_cast<std::size_t>(k - bb.lo)];
        if (is_zero(x)) {
          continue;
        }
        const S& y = ab.a[static_cast<std::size_t>(k + db - ab.lo)];
        if (is_zero(y)) {
          continue;
        }
        rb.a[static_cast<std::size_t>(k - rb.lo)] += y * x;
      }
    }
  }
  r.set_valid_hi(std::min(b.valid_hi(), a.valid_hi() - b.max_band()));
  r.prune();
  return r;
}

template <class S>
GradedOperator<S> adjoint(const GradedOperator<S>& op, const NormTable<S>& table)
{
  const int n = op.order();
  if (table.order() < n) {
    throw DimensionMismatch("norm table shorter than operator");
  }
  GradedOperator<S> r(n);
  for (const auto& [d, b] : op.bands()) {
    auto& rb = r.band(-d);
    // ratio = g[k+d]/g[k], advanced incrementally along the band.
    S ratio = table.ratio(b.lo, b.lo + d);
    for (int k = b.lo; k <= b.hi(); ++k) {
      if (k > b.lo) {
        ratio = ratio * table.step(k + d) / table.step(k);
      }
      const S& x = b.a[static_cast<std::size_t>(k - b.lo)];
      if (!is_zero(x)) {
        rb.a[static_cast<std::size_t>(k + d - rb.lo)] = x * ratio;
      }
    }
  }
  r.set_valid_hi(std::min(n, op.valid_hi() + std::min(0, op.min_band())));
  r.prune();
  return r;
}

template <class S>
GradedVector<S> apply(const GradedOperator<S>& op, const GradedVector<S>& v)
{
  if (v.order() != op.order()) {
    throw DimensionMismatch("vector order " + std::to_string(v.order()) + " vs operator order " +
                            std::to_string(op.order()));
  }
  GradedVector<S> out(op.order());
  for (int k = 0; k <= v.order(); ++k) {
    const S& x = v.coeff[static_cast<std::size_t>(k)];
    if (is_zero(x)) {
      continue;
    }
    if (k > op.valid_hi()) {
      throw WindowExceeded("degree " + std::to_string(k) + " outside operator window [0, " +
                           std::to_string(op.valid_hi()) + "]");
    }
    for (const auto& [d, b] : op.bands()) {
      if (k >= b.lo && k <= b.hi()) {
        out.coeff[static_cast<std::size_t>(k + d)] += b.a[static_cast<std::size_t>(k - b.lo)] * x;
      }
    }
  }
  return out;
}

template <class S>
bool vanishes_on_window(const GradedOperator<S>& op, int hi)
{
  for (const auto& [d, b] : op.bands()) {
    for (int k = b.lo; k <= std::min(hi, b.hi()); ++k) {
      if (!is_zero(b.a[static_cast<std::size_t>(k - b.lo)])) {
        return false;
      }
    }
  }
  return true;
}

template <class S>
bool equal_on_window(const GradedOperator<S>& a, const GradedOperator<S>& b, int hi)
{
  check_orders(a, b);
  return vanishes_on_window(a - b, hi);
}

template <class S>
Real max_abs_on_window(const GradedOperator<S>& op, int hi)
{
  Real m = 0;
  for (const auto& [d, b] : op.bands()) {
    for (int k = b.lo; k <= std::min(hi, b.hi()); ++k) {
      const Real x = abs_of(to_real(b.a[static_cast<std::size_t>(k - b.lo)]));
      if (x > m) {
        m = x;
      }
    }
  }
  return m;
}

template <class S>
GradedOperator<S> truncate(const GradedOperator<S>& op, int order)
{
  GradedOperator<S> r(order);
  for (const auto& [d, b] : op.bands()) {
    const int lo = GradedOperator<S>::column_lo(order, d);
    const int hi = GradedOperator<S>::column_hi(order, d);
    if (hi < lo) {
      continue;
    }
    auto& rb = r.band(d);
    for (int k = std::max(lo, b.lo); k <= std::min(hi, b.hi()); ++k) {
      rb.a[static_cast<std::size_t>(k - rb.lo)] = b.a[static_cast<std::size_t>(k - b.lo)];
    }
  }
  r.set_valid_hi(std::min(op.valid_hi(), order - std::max(0, op.max_band())));
  r.prune();
  return r;
}

#define QRCONF_INSTANTIATE(S)                                                                  \
  template class GradedOperator<S>;                                                            \
  template GradedOperator<S> operator+(const GradedOperator<S>&, const GradedOperator<S>&);    \
  template GradedOperator<S> operator-(const GradedOperator<S>&, const GradedOperator<S>&);    \
  template GradedOperator<S> operator*(const S&, const GradedOperator<S>&);                    \
  template GradedOperator<S> operator*(const GradedOperator<S>&, const GradedOperator<S>&);    \
  template GradedOperator<S> adjoint(const GradedOperator<S>&, const NormTable<S>&);           \
  template GradedVector<S> apply(const GradedOperator<S>&, const GradedVector<S>&);            \
  template bool vanishes_on_window(const GradedOperator<S>&, int);                             \
  template bool equal_on_window(const GradedOperator<S>&, const GradedOperator<S>&, int);      \
  template Real max_abs_on_window(const GradedOperator<S>&, int);                              \
  template GradedOperator<S> truncate(const GradedOperator<S>&, int);

QRCONF_INSTANTIATE(Rational)
QRCONF_INSTANTIATE(Real)

#undef QRCONF_INSTANTIATE

}  // namespace qrconf
