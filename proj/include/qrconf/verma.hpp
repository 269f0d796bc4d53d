#pragma once

// Verma module V_h over sl(2,C), realized on polynomials C[z] with the
// monomial basis z^0, z^1, ..., truncated at degree N.

#include "qrconf/errors.hpp"
#include "qrconf/scalar.hpp"

#include <optional>
#include <vector>

namespace qrconf {

/// Extremal weight h with its derived data.
template <class S>
struct Weight
{
  S h;
  /// 1/(2h-1); empty at h = 1/2.
  std::optional<S> q_r;
  /// h != -n/2 for every integer n >= 0.
  bool nondegenerate = true;
  /// Positive-definite norm table, i.e. h > 0.
  bool unitarizable = false;
};

template <class S>
Weight<S> classify_weight(const S& h);

/// Squared norms g[n] = ||z^n||^2 of the monomial basis, normalized by
/// g[0] = 1 and fixed by l_1 being adjoint to l_{-1}:
///   g[n] = n (n - 1 + 2h) g[n-1].
template <class S>
class NormTable
{
public:
  NormTable(const Weight<S>& weight, int order);

  const Weight<S>& weight() const { return weight_; }
  int order() const { return order_; }
  const std::vector<S>& g() const { return g_; }
  const S& operator[](int n) const { return g_.at(static_cast<std::size_t>(n)); }

  /// step(n) = g[n]/g[n-1] = n (n - 1 + 2h), for 1 <= n <= order.
  const S& step(int n) const { return steps_.at(static_cast<std::size_t>(n)); }

  /// g[to]/g[from] as a product of steps; avoids dividing huge norms.
  S ratio(int from, int to) const;

private:
  Weight<S> weight_;
  int order_;
  std::vector<S> g_;
  std::vector<S> steps_;
};

template <class S>
NormTable<S> norm_table(const Weight<S>& weight, int order)
{
  return NormTable<S>(weight, order);
}

/// Coefficient vector in the monomial basis; coeff[n] multiplies z^n.
template <class S>
struct GradedVector
{
  std::vector<S> coeff;

  GradedVector() = default;
  explicit GradedVector(int order) : coeff(static_cast<std::size_t>(order + 1)) {}

  int order() const { return static_cast<int>(coeff.size()) - 1; }

  static GradedVector monomial(int order, int degree, S value = from_int<S>(1))
  {
    GradedVector v(order);
    v.coeff.at(static_cast<std::size_t>(degree)) = std::move(value);
    return v;
  }

  bool operator==(const GradedVector&) const = default;
};

/// Sum over n of conj(u[n]) v[n] g[n]. Scalars are real, so conj is trivial.
template <class S>
S inner_product(const GradedVector<S>& u, const GradedVector<S>& v, const NormTable<S>& table);

/// Number of monomials z^n, n <= order, with negative squared norm.
template <class S>
int signature_count(const Weight<S>& weight, int order);

extern template struct Weight<Rational>;
extern template struct Weight<Real>;
extern template class NormTable<Rational>;
extern template class NormTable<Real>;

}  // namespace qrconf
