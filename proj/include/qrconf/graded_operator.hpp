#pragma once

// Banded operators on the truncated Verma module span{z^0 .. z^N}.
//
// An operator is a finite sum of bands. Band d sends z^k to a_d[k] z^{k+d}.
// Entries are stored for every column k with 0 <= k <= N and 0 <= k+d <= N.
//
// Truncation drops images above degree N, so a product of truncated
// operators is only correct on low columns. Each operator carries the column
// window [valid_lo, valid_hi] on which it agrees with the untruncated
// operator: for a column k in the window every image degree is <= N and
// every entry is exact.

#include "qrconf/errors.hpp"
#include "qrconf/scalar.hpp"
#include "qrconf/verma.hpp"

#include <map>
#include <vector>

namespace qrconf {

template <class S>
class GradedOperator
{
public:
  struct Band
  {
    int lo = 0;            // first stored column
    std::vector<S> a;      // a[k - lo]
    int hi() const { return lo + static_cast<int>(a.size()) - 1; }
  };

  /// Zero operator with a full window.
  explicit GradedOperator(int order);

  static GradedOperator identity(int order);

  int order() const { return order_; }
  int valid_lo() const { return 0; }
  int valid_hi() const { return valid_hi_; }
  void set_valid_hi(int hi) { valid_hi_ = std::min(hi, order_); }

  const std::map<int, Band>& bands() const { return bands_; }
  bool has_band(int d) const { return bands_.count(d) != 0; }

  /// Largest and smallest band shift; 0 for the zero operator.
  int max_band() const;
  int min_band() const;

  /// Stored range of columns for band d.
  static int column_lo(int /*order*/, int d) { return d < 0 ? -d : 0; }
  static int column_hi(int order, int d) { return d > 0 ? order - d : order; }

  /// a_d[k], or zero when not stored.
  S coeff(int d, int k) const;

  /// Allocates band d (zero-filled) if missing and returns it.
  Band& band(int d);

  /// Sets a_d[k]; k must be a storable column for band d.
  void set(int d, int k, S value);

  /// Drops bands whose stored entries are all zero.
  void prune();

  bool is_zero() const { return bands_.empty(); }

private:
  int order_;
  int valid_hi_;
  std::map<int, Band> bands_;
};

template <class S>
GradedOperator<S> operator+(const GradedOperator<S>& a, const GradedOperator<S>& b);
template <class S>
GradedOperator<S> operator-(const GradedOperator<S>& a, const GradedOperator<S>& b);
template <class S>
GradedOperator<S> operator*(const S& c, const GradedOperator<S>& a);
/// Composition: (a * b) z^k = a(b z^k).
template <class S>
GradedOperator<S> operator*(const GradedOperator<S>& a, const GradedOperator<S>& b);

template <class S>
GradedOperator<S> commutator(const GradedOperator<S>& a, const GradedOperator<S>& b)
{
  return a * b - b * a;
}

/// Adjoint with respect to the hermitean form of the norm table. For an
/// indefinite table this is the formal adjoint.
template <class S>
GradedOperator<S> adjoint(const GradedOperator<S>& op, const NormTable<S>& table);

/// Exact banded matrix-vector product. Every nonzero degree of v must lie in
/// the operator's window.
template <class S>
GradedVector<S> apply(const GradedOperator<S>& op, const GradedVector<S>& v);

/// Common window of two operators.
template <class S>
int common_window(const GradedOperator<S>& a, const GradedOperator<S>& b)
{
  return std::min(a.valid_hi(), b.valid_hi());
}

/// True when every entry in columns [0, hi] vanishes exactly.
template <class S>
bool vanishes_on_window(const GradedOperator<S>& op, int hi);

template <class S>
bool vanishes_on_window(const GradedOperator<S>& op)
{
  return vanishes_on_window(op, op.valid_hi());
}

/// Exact equality of a and b on columns [0, hi], hi defaulting to the
/// common window.
template <class S>
bool equal_on_window(const GradedOperator<S>& a, const GradedOperator<S>& b, int hi);

template <class S>
bool equal_on_window(const GradedOperator<S>& a, const GradedOperator<S>& b)
{
  return equal_on_window(a, b, common_window(a, b));
}

/// Largest |entry| over columns [0, hi].
template <class S>
Real max_abs_on_window(const GradedOperator<S>& op, int hi);

/// Restriction to a smaller truncation order; entries and window are kept
/// where they still fit.
template <class S>
GradedOperator<S> truncate(const GradedOperator<S>& op, int order);

extern template class GradedOperator<Rational>;
extern template class GradedOperator<Real>;

}  // namespace qrconf
