#include "qrconf/generators.hpp"

#include <string>

namespace qrconf {

namespace {

template <class S>
void require_nondegenerate(const Weight<S>& w)
{
  if (!w.nondegenerate) {
    throw DegenerateWeight("Verma module with h = " + to_string(w.h) + " is degenerate");
  }
}

template <class S>
S nonzero_or_throw(S x, const char* what)
{
  if (is_zero(x)) {
    throw DegenerateWeight(std::string("zero denominator in ") + what);
  }
  return x;
}

// L_k z^m = m!/(m-k)! (m - k + (k+1)h) z^{m-k}
template <class S>
GradedOperator<S> lowering_L(int k, const Weight<S>& w, int order)
{
  GradedOperator<S> op(order);
  if (k > order) {
    return op;
  }
  auto& b = op.band(-k);
  const S shift = from_int<S>(k + 1) * w.h;
  S falling = from_int<S>(1);  // m!/(m-k)! at m = k
  for (int j = 2; j <= k; ++j) {
    falling *= from_int<S>(j);
  }
  for (int m = k; m <= order; ++m) {
    if (m > k) {
      falling = falling * from_int<S>(m) / from_int<S>(m - k);
    }
    b.a[static_cast<std::size_t>(m - b.lo)] = falling * (from_int<S>(m - k) + shift);
  }
  op.prune();
  return op;
}

// L_{-k} z^m = (m + (k+1)h) / prod_{j<k} (m + 2h + j) z^{m+k}
template <class S>
GradedOperator<S> raising_L(int k, const Weight<S>& w, int order)
{
  GradedOperator<S> op(order);
  if (k > order) {
    op.set_valid_hi(-1);
    return op;
  }
  auto& b = op.band(k);
  const S two_h = from_int<S>(2) * w.h;
  const S shift = from_int<S>(k + 1) * w.h;
  S denom = from_int<S>(1);
  for (int j = 0; j < k; ++j) {
    denom *= nonzero_or_throw(two_h + from_int<S>(j), "L_{-k}");
  }
  for (int m = 0; m + k <= order; ++m) {
    if (m > 0) {
      denom = denom * nonzero_or_throw(from_int<S>(m + k - 1) + two_h, "L_{-k}") /
              (from_int<S>(m - 1) + two_h);
    }
    b.a[static_cast<std::size_t>(m)] = (from_int<S>(m) + shift) / denom;
  }
  op.set_valid_hi(order - k);
  op.prune();
  return op;
}

// D^k z^m = m!/(m-k)! z^{m-k}
template <class S>
GradedOperator<S> power_D(int k, int order)
{
  GradedOperator<S> op(order);
  if (k == 0) {
    return GradedOperator<S>::identity(order);
  }
  if (k > order) {
    return op;
  }
  auto& b = op.band(-k);
  S falling = from_int<S>(1);
  for (int j = 2; j <= k; ++j) {
    falling *= from_int<S>(j);
  }
  for (int m = k; m <= order; ++m) {
    if (m > k) {
      falling = falling * from_int<S>(m) / from_int<S>(m - k);
    }
    b.a[static_cast<std::size_t>(m - b.lo)] = falling;
  }
  return op;
}

// F^k z^m = z^{m+k} / prod_{j<k} (m + 2h + j)
template <class S>
GradedOperator<S> power_F(int k, const Weight<S>& w, int order)
{
  if (k == 0) {
    return GradedOperator<S>::identity(order);
  }
  GradedOperator<S> op(order);
  if (k > order) {
    op.set_valid_hi(-1);
    return op;
  }
  auto& b = op.band(k);
  const S two_h = from_int<S>(2) * w.h;
  S denom = from_int<S>(1);
  for (int j = 0; j < k; ++j) {
    denom *= nonzero_or_throw(two_h + from_int<S>(j), "F^k");
  }
  for (int m = 0; m + k <= order; ++m) {
    if (m > 0) {
      denom = denom * nonzero_or_throw(from_int<S>(m + k - 1) + two_h, "F^k") / (from_int<S>(m - 1) + two_h);
    }
    b.a[static_cast<std::size_t>(m)] = from_int<S>(1) / denom;
  }
  op.set_valid_hi(order - k);
  return op;
}

}  // namespace

template <class S>
GradedOperator<S> build_generator(GeneratorKind kind, int index, const Weight<S>& weight, int order)
{
  require_nondegenerate(weight);
  switch (kind) {
    case GeneratorKind::l:
      if (index < -1 || index > 1) {
        throw UnsupportedKind("sl(2) generator l_" + std::to_string(index) + " does not exist");
      }
      return build_generator(GeneratorKind::L, index, weight, order);
    case GeneratorKind::D:
      return power_D<S>(1, order);
    case GeneratorKind::F:
      return power_F(1, weight, order);
    case GeneratorKind::L:
      return index >= 0 ? lowering_L(index, weight, order) : raising_L(-index, weight, order);
    case GeneratorKind::J:
      return index >= 0 ? power_D<S>(index, order) : power_F(-index, weight, order);
    case GeneratorKind::xi: {
      GradedOperator<S> op(order);
      auto& b = op.band(0);
      for (int m = 0; m <= order; ++m) {
        b.a[static_cast<std::size_t>(m)] = from_int<S>(m);
      }
      op.prune();
      return op;
    }
  }
  throw UnsupportedKind("unknown generator kind");
}

template GradedOperator<Rational> build_generator(GeneratorKind, int, const Weight<Rational>&, int);
template GradedOperator<Real> build_generator(GeneratorKind, int, const Weight<Real>&, int);

}  // namespace qrconf
