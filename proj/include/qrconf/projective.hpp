#pragma once

// Deviations A_{nm} = [L_n, L_m] - (n-m) L_{n+m} of the q_R-conformal
// representation of the Witt algebra and the invariants built from them:
// fundamental form, central charge, mean deviation, curvature form, Ricci
// contractions, B_X and Q-hat operators.
//
// Contractions over the inverse pairing alpha^{YZ} run over the ordered
// pairs (Y, Z) = (e_{-m}, e_m), 2 <= |m| <= M, with weight
//   alpha^{-m,m} = 1 / (2 alpha_{m,-m}).
// The factor 1/2 compensates for each unordered pair appearing twice; with
// it the mean deviation alpha^{YZ} A_{YZ} converges to -3/(2h-1) E.
// Ricci contractions pair the inverse form with the curvature form as
//   R2_{XY} = alpha^{ZV} R_{XY,ZV},   R1_{XY} = alpha^{ZV} R_{XZ,YV},
// which makes R2 = Tr(A_{XY} * mean deviation).

#include "qrconf/generators.hpp"
#include "qrconf/graded_operator.hpp"
#include "qrconf/tail_estimate.hpp"
#include "qrconf/verma.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace qrconf {

/// A_{nm} on span{z^0..z^order}. Vanishes when n, m >= -1 or n, m <= 1.
template <class S>
GradedOperator<S> deviation(int n, int m, const Weight<S>& weight, int order);

/// Thread-safe cache of generators L_n and deviations A_{nm} at a fixed order.
template <class S>
class DeviationTable
{
public:
  DeviationTable(Weight<S> weight, int order);

  const Weight<S>& weight() const { return weight_; }
  int order() const { return order_; }

  const GradedOperator<S>& L(int n) const;
  const GradedOperator<S>& get(int n, int m) const;
  std::size_t cached_deviations() const;

private:
  Weight<S> weight_;
  int order_;
  mutable std::shared_mutex mutex_;
  mutable std::map<int, std::unique_ptr<GradedOperator<S>>> generators_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<GradedOperator<S>>> deviations_;
};

/// kappa = (6h^2 - 6h + 1)/6.
template <class S>
S kappa(const Weight<S>& weight);

/// alpha_{ij} = kappa (j^3 - j) delta(i + j).
template <class S>
struct FundamentalForm
{
  S kappa;
  S operator()(int i, int j) const;
};

template <class S>
FundamentalForm<S> fundamental_form(const Weight<S>& weight);

/// Extrapolated trace of A_{n,-n} over the cutoff ladder.
template <class S>
TailEstimate<S> fundamental_form_empirical(int n, const Weight<S>& weight, const std::vector<int>& cutoffs);

template <class S>
struct CentralCharge
{
  S direct;                  // -2 (6h^2 - 6h + 1)
  std::optional<S> from_qr;  // 1 - 3 q_R^{-2}, absent at h = 1/2
};

template <class S>
CentralCharge<S> central_charge(const Weight<S>& weight);

/// 1 - 3 q_R^{-2}; throws UndefinedQR at h = 1/2.
template <class S>
S central_charge_from_qr(const Weight<S>& weight);

/// alpha = -3/(2h - 1); throws UndefinedQR at h = 1/2.
template <class S>
S deviation_constant(const Weight<S>& weight);

template <class S>
struct IdentityCheck
{
  S alpha;
  S c;
  S residual_27;        // alpha^2 (1 - c) - 27
  S residual_alpha_qr;  // alpha + 3 q_R
};

template <class S>
IdentityCheck<S> identity_check(const Weight<S>& weight);

/// Contraction cutoffs used for extrapolation in M: M/8, M/4, M/2, M
/// (values below 4 dropped).
std::vector<int> contraction_ladder(int M);

/// Trace ladder for terms contracted up to index M: `cutoffs` extended by
/// doubling until the top cutoff reaches 40 M. Below that the partial traces
/// of the high-index terms are still pre-asymptotic.
std::vector<int> ricci_cutoffs(const std::vector<int>& cutoffs, int M);

/// Result of a contraction over the inverse pairing, truncated at |m| <= M.
template <class S>
struct Contraction
{
  GradedOperator<S> partial;  // the operator at the full cutoff M
  int band = 0;               // band whose entries are tracked
  std::vector<int> columns;   // tracked columns
  /// Per tracked column: partial sums over the M ladder, extrapolated.
  std::vector<TailEstimate<S>> entries;
};

/// Mean deviation alpha^{YZ} A_{YZ}; tracks band 0 on columns 0..degrees-1.
/// Requires h > 1/2 (ConvergenceDomain) and kappa != 0 (ZeroForm).
template <class S>
Contraction<S> mean_deviation(const Weight<S>& weight, int M, int order, int degrees = 10);

/// B_{e_n} = alpha^{YZ} A_{[e_n, Y], Z}, tracked on band -n.
template <class S>
Contraction<S> b_operator(int n, const Weight<S>& weight, int M, int order, int degrees = 10);

/// Q-hat = (1/alpha) alpha^{YZ} A_{Q(Y), Z} for Q diagonal, Q(e_k) = q(k) e_k.
template <class S>
Contraction<S> qhat(const std::function<S(int)>& q, const Weight<S>& weight, int M, int order, int degrees = 10);

/// dalpha(X,Y,Z) = alpha_{X,[Y,Z]} + alpha_{Y,[Z,X]} + alpha_{Z,[X,Y]} from the closed form.
template <class S>
S dalpha(int n, int m, int k, const Weight<S>& weight);

template <class S>
struct BetaDalpha
{
  TailEstimate<S> beta;  // Tr [L_n, A_{mk}]
  S dalpha;
};

template <class S>
BetaDalpha<S> beta_and_dalpha(int n, int m, int k, const Weight<S>& weight, const std::vector<int>& cutoffs);

/// R_{nm,uv} = Tr(A_{nm} A_{uv}); exactly zero unless n + m + u + v = 0.
template <class S>
TailEstimate<S> curvature_form(int n, int m, int u, int v, const Weight<S>& weight, const std::vector<int>& cutoffs);

/// A real number with an error bound.
struct Estimate
{
  Real value = 0;
  Real error = 0;
};

struct RicciEstimate
{
  TailEstimate<Real> contraction;  // R^{(kind)}_{nm} over the M ladder
  Estimate value;                  // extrapolated R with combined error
  Estimate rho;                    // R / alpha_{nm}; zero when alpha_{nm} = 0
};

/// Ricci tensor of the first (kind = 1) or second (kind = 2) kind at (e_n, e_m).
template <class S>
RicciEstimate ricci(int kind, int n, int m, const Weight<S>& weight, int M, const std::vector<int>& cutoffs);

/// K_ij = R_{i,-j,j,-i} / (alpha_{i,-i} alpha_{j,-j}).
template <class S>
Estimate scalar_curvature(int i, int j, const Weight<S>& weight, const std::vector<int>& cutoffs);

/// R_{XY,ZV} + R_{YZ,XV} + R_{ZX,YV} with X=e_n, Y=e_m, Z=e_u, V=e_v.
template <class S>
Estimate ricci_identity_residual(int n, int m, int u, int v, const Weight<S>& weight, const std::vector<int>& cutoffs);

/// T(word) = L_{w0} L_{w1} ... for a degree-0 word, compared with its adjoint.
template <class S>
bool is_self_adjoint_word(const std::vector<int>& word, const Weight<S>& weight, int order);

/// Operator of a word of generators L_{w0} L_{w1} ...
template <class S>
GradedOperator<S> word_operator(const std::vector<int>& word, const Weight<S>& weight, int order);

/// Iterated commutator [..[[L_{n0}, L_{n1}], L_{n2}], ..] minus the image
/// under T of the iterated Witt bracket, which is a multiple of e_{n0+..+nk}.
template <class S>
struct ClosednessReport
{
  int witt_index = 0;
  S witt_coefficient;
  GradedOperator<S> remainder;
  TailEstimate<S> remainder_hs;
};

template <class S>
ClosednessReport<S> closedness_check(const std::vector<int>& indices, const Weight<S>& weight,
                                     const std::vector<int>& cutoffs);

}  // namespace qrconf
