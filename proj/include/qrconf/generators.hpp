#pragma once

// The operators realized on V_h = C[z]:
//   l_{-1} = z,  l_0 = z d/dz + h,  l_1 = z d^2/dz^2 + 2h d/dz,
//   D = d/dz,  F = z (xi + 2h)^{-1}  with xi = z d/dz,
//   L_k    = (xi + (k+1)h) d^k/dz^k                          (k >= 0),
//   L_{-k} = z^k (xi + (k+1)h) / ((xi+2h)(xi+2h+1)...(xi+2h+k-1))  (k >= 1),
//   J_k = D^k,  J_{-k} = F^k.

#include "qrconf/graded_operator.hpp"
#include "qrconf/verma.hpp"

namespace qrconf {

enum class GeneratorKind
{
  l,    // sl(2) generator l_i, i in {-1, 0, 1}
  D,
  F,
  L,    // q_R-conformal symmetry L_n
  J,    // tensor family J_k
  xi,   // Euler operator z d/dz
};

/// Single-band operator for the given kind. `index` selects i, n or k where
/// the kind takes one and is ignored otherwise.
template <class S>
GradedOperator<S> build_generator(GeneratorKind kind, int index, const Weight<S>& weight, int order);

template <class S>
GradedOperator<S> make_l(int i, const Weight<S>& w, int order)
{
  return build_generator(GeneratorKind::l, i, w, order);
}

template <class S>
GradedOperator<S> make_D(const Weight<S>& w, int order)
{
  return build_generator(GeneratorKind::D, 0, w, order);
}

template <class S>
GradedOperator<S> make_F(const Weight<S>& w, int order)
{
  return build_generator(GeneratorKind::F, 0, w, order);
}

template <class S>
GradedOperator<S> make_L(int n, const Weight<S>& w, int order)
{
  return build_generator(GeneratorKind::L, n, w, order);
}

template <class S>
GradedOperator<S> make_J(int k, const Weight<S>& w, int order)
{
  return build_generator(GeneratorKind::J, k, w, order);
}

}  // namespace qrconf
