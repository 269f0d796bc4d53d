#pragma once

// Schwarzian derivative and the infinitesimal coadjoint action of Vect(S^1)
// on pairs (p(t) dt^2, b).

#include "qrconf/errors.hpp"
#include "qrconf/scalar.hpp"
#include "qrconf/witt.hpp"

#include <vector>

namespace qrconf {

/// Truncated power series sum_{k < size} c[k] w^k.
template <class S>
struct PowerSeries
{
  std::vector<S> c;

  PowerSeries() = default;
  explicit PowerSeries(std::vector<S> coeffs) : c(std::move(coeffs)) {}

  int size() const { return static_cast<int>(c.size()); }
  S at(int k) const { return k < size() ? c[static_cast<std::size_t>(k)] : from_int<S>(0); }

  PowerSeries derivative() const;
  PowerSeries truncated(int n) const;
};

template <class S>
PowerSeries<S> operator*(const PowerSeries<S>& a, const PowerSeries<S>& b);
/// Quotient truncated to the shorter length; b must have a nonzero constant term.
template <class S>
PowerSeries<S> operator/(const PowerSeries<S>& a, const PowerSeries<S>& b);
template <class S>
PowerSeries<S> operator-(const PowerSeries<S>& a, const PowerSeries<S>& b);
template <class S>
PowerSeries<S> operator*(const S& k, const PowerSeries<S>& a);

/// S(g) = g'''/g' - 3/2 (g''/g')^2 for g expanded around a point where
/// g' does not vanish. Returns the first `order` coefficients; g needs at
/// least order + 3 coefficients.
template <class S>
PowerSeries<S> schwarzian(const PowerSeries<S>& g, int order);

/// Pointwise Schwarzian from the first three derivatives.
template <class S>
S schwarzian_at(const S& d1, const S& d2, const S& d3);

/// Taylor coefficients of (a w + b)/(c w + d) at w = 0 (d != 0).
PowerSeries<Rational> mobius_series(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                    int terms);

/// Taylor coefficients of g(z0 + w) for a polynomial g given by its
/// coefficients in z.
PowerSeries<Rational> shift_polynomial(const std::vector<Rational>& poly, const Rational& z0, int terms);

/// Taylor coefficients of exp(lambda t).
PowerSeries<Rational> exponential_series(const Rational& lambda, int terms);

/// Infinitesimal coadjoint action of v(t) d/dt on (p(t) dt^2, b):
///   ad*_v (p, b) = (v p' + 2 v' p - b v''', 0).
/// The level b is unchanged by the action; only the quadratic differential
/// part is returned.
FourierDensity coadjoint_inf(const FourierDensity& v, const FourierDensity& p, const GaussRational& b);

/// Dimension of the stabilizer of (a dt^2, b) among trigonometric
/// polynomial fields with |mode| <= modes, computed as the nullity of the
/// coadjoint map. Throws ZeroLevel when b = 0.
int stabilizer_dimension(const Rational& a, const Rational& b, int modes);

/// Rank of a dense matrix over Gaussian rationals (row reduction).
int gauss_rank(std::vector<std::vector<GaussRational>> rows);

}  // namespace qrconf
