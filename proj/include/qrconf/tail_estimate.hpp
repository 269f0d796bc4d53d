#pragma once

// Partial sums of convergent series (traces, Hilbert-Schmidt norms,
// contractions over the inverse pairing) with a limit extrapolated in the
// reciprocal cutoff.

#include "qrconf/graded_operator.hpp"
#include "qrconf/scalar.hpp"
#include "qrconf/verma.hpp"

#include <utility>
#include <vector>

namespace qrconf {

template <class S>
struct TailEstimate
{
  /// (cutoff, partial sum) at strictly increasing cutoffs.
  std::vector<std::pair<int, S>> partial_sums;
  Real extrapolated = 0;
  /// Infinite when the series is flagged divergent.
  Real error_bound = 0;
  bool diverges = false;

  const S& last() const { return partial_sums.back().second; }
};

/// Default cutoff ladder for traces.
inline std::vector<int> default_cutoffs() { return {256, 512, 1024, 2048, 4096}; }

/// Polynomial extrapolation in x = 1/cutoff to x = 0 (Neville/Richardson
/// table). Returns (limit, difference between the two highest-order
/// extrapolants).
std::pair<Real, Real> extrapolate_reciprocal(const std::vector<std::pair<int, Real>>& samples);

/// Least-squares fit of S(M) = S + sum_{j=1..3} (a_j log M + b_j)/M^j over
/// the samples with M >= M_max/2. Sums over the contraction index have terms
/// decaying like log(p)/p^2, which a pure 1/M model cannot follow. The error
/// is the spread against the same fit over M >= M_max/4.
std::pair<Real, Real> extrapolate_log_reciprocal(const std::vector<std::pair<int, Real>>& samples);

/// Builds a TailEstimate from partial sums. Increments that fail to shrink
/// by the factor `shrink` between successive cutoffs mark the series divergent.
template <class S>
TailEstimate<S> make_tail_estimate(std::vector<std::pair<int, S>> partial_sums, double shrink = 1.5);

/// TailEstimate of a sum over the contraction index. `every` holds the partial
/// sum at each consecutive M; only the `ladder` points are kept as partial_sums.
template <class S>
TailEstimate<S> make_contraction_estimate(const std::vector<std::pair<int, S>>& every, const std::vector<int>& ladder);

/// Throws std::invalid_argument unless cutoffs are positive and strictly increasing.
void check_ladder(const std::vector<int>& cutoffs);

/// Partial sums of the band-0 diagonal over columns k < cutoff. An operator
/// without a band 0 has trace exactly 0.
template <class S>
TailEstimate<S> trace_band0(const GradedOperator<S>& op, const std::vector<int>& cutoffs);

/// Squared Hilbert-Schmidt norm over columns k < cutoff, using orthonormalized
/// entries a_d[k] sqrt(g[k+d]/g[k]).
template <class S>
TailEstimate<S> hs_norm_sq(const GradedOperator<S>& op, const NormTable<S>& table, const std::vector<int>& cutoffs);

}  // namespace qrconf
