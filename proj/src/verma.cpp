#include "qrconf/verma.hpp"

#include <string>

namespace qrconf {

template <class S>
Weight<S> classify_weight(const S& h)
{
  Weight<S> w;
  w.h = h;
  const S two_h = from_int<S>(2) * h;
  w.nondegenerate = !(is_integer(two_h) && sign_of(two_h) <= 0);
  w.unitarizable = sign_of(h) > 0;
  const S denom = two_h - from_int<S>(1);
  if (!is_zero(denom)) {
    w.q_r = from_int<S>(1) / denom;
  }
  return w;
}

template <class S>
NormTable<S>::NormTable(const Weight<S>& weight, int order)
    : weight_(weight), order_(order)
{
  if (order < 0) {
    throw DimensionMismatch("negative truncation order");
  }
  const S two_h = from_int<S>(2) * weight.h;
  g_.reserve(static_cast<std::size_t>(order + 1));
  steps_.reserve(static_cast<std::size_t>(order + 1));
  g_.push_back(from_int<S>(1));
  steps_.push_back(from_int<S>(1));
  for (int n = 1; n <= order; ++n) {
    S step = from_int<S>(n) * (from_int<S>(n - 1) + two_h);
    if (is_zero(step)) {
      throw DegenerateWeight("norm of z^" + std::to_string(n) + " vanishes");
    }
    g_.push_back(g_.back() * step);
    steps_.push_back(std::move(step));
  }
}

template <class S>
S NormTable<S>::ratio(int from, int to) const
{
  S r = from_int<S>(1);
  if (to >= from) {
    for (int n = from + 1; n <= to; ++n) {
      r *= step(n);
    }
  } else {
    for (int n = to + 1; n <= from; ++n) {
      r /= step(n);
    }
  }
  return r;
}

template <class S>
S inner_product(const GradedVector<S>& u, const GradedVector<S>& v, const NormTable<S>& table)
{
  if (u.order() != v.order()) {
    throw DimensionMismatch("inner product of vectors with different truncation orders");
  }
  if (u.order() > table.order()) {
    throw DimensionMismatch("norm table shorter than vectors");
  }
  S acc = from_int<S>(0);
  for (std::size_t n = 0; n < u.coeff.size(); ++n) {
    if (!is_zero(u.coeff[n]) && !is_zero(v.coeff[n])) {
      acc += u.coeff[n] * v.coeff[n] * table.g()[n];
    }
  }
  return acc;
}

template <class S>
int signature_count(const Weight<S>& weight, int order)
{
  // Only signs matter: track the sign of g[n] through the step factors.
  const S two_h = from_int<S>(2) * weight.h;
  int sign = 1;
  int negatives = 0;
  for (int n = 1; n <= order; ++n) {
    const int s = sign_of(from_int<S>(n - 1) + two_h);
    if (s == 0) {
      throw DegenerateWeight("norm of z^" + std::to_string(n) + " vanishes");
    }
    sign *= s;
    if (sign < 0) {
      ++negatives;
    }
  }
  return negatives;
}

template struct Weight<Rational>;
template struct Weight<Real>;
template class NormTable<Rational>;
template class NormTable<Real>;
template Weight<Rational> classify_weight(const Rational&);
template Weight<Real> classify_weight(const Real&);
template Rational inner_product(const GradedVector<Rational>&, const GradedVector<Rational>&,
                                const NormTable<Rational>&);
template Real inner_product(const GradedVector<Real>&, const GradedVector<Real>&, const NormTable<Real>&);
template int signature_count(const Weight<Rational>&, int);
template int signature_count(const Weight<Real>&, int);

}  // namespace qrconf
