#include "qrconf/projective.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <string>

namespace qrconf {

namespace {

bool deviation_vanishes(int n, int m) { return (n >= -1 && m >= -1) || (n <= 1 && m <= 1); }

// Rebuilds with a larger order until the window reaches `need_hi`.
template <class S, class Build>
GradedOperator<S> with_window(int need_hi, int order, Build&& build)
{
  for (int attempt = 0; attempt < 4; ++attempt) {
    GradedOperator<S> op = build(order);
    if (op.valid_hi() >= need_hi) {
      return op;
    }
    order += need_hi - op.valid_hi();
  }
  throw WindowExceeded("could not reach window " + std::to_string(need_hi));
}

template <class S>
TailEstimate<S> zero_estimate(const std::vector<int>& cutoffs)
{
  std::vector<std::pair<int, S>> sums;
  for (int c : cutoffs) {
    sums.emplace_back(c, from_int<S>(0));
  }
  return make_tail_estimate(std::move(sums));
}

template <class S>
void require_contraction_domain(const Weight<S>& w)
{
  if (sign_of(w.h - from_ratio<S>(1, 2)) <= 0) {
    throw ConvergenceDomain("contraction over the inverse pairing needs h > 1/2, got h = " + to_string(w.h));
  }
  if (is_negligible(kappa(w))) {
    throw ZeroForm("fundamental form vanishes at h = " + to_string(w.h));
  }
}

template <class S>
S witt_bracket_coefficient(const std::vector<int>& indices, int& index)
{
  S coeff = from_int<S>(1);
  index = indices.front();
  for (std::size_t i = 1; i < indices.size(); ++i) {
    coeff *= from_int<S>(index - indices[i]);
    index += indices[i];
  }
  return coeff;
}

int total_abs(std::initializer_list<int> xs)
{
  int t = 0;
  for (int x : xs) {
    t += std::abs(x);
  }
  return t;
}

}  // namespace

template <class S>
GradedOperator<S> deviation(int n, int m, const Weight<S>& weight, int order)
{
  const GradedOperator<S> ln = make_L(n, weight, order);
  const GradedOperator<S> lm = make_L(m, weight, order);
  const GradedOperator<S> lnm = make_L(n + m, weight, order);
  GradedOperator<S> a = commutator(ln, lm) - from_int<S>(n - m) * lnm;
  if (a.valid_hi() < 0) {
    throw WindowExceeded("order " + std::to_string(order) + " leaves no exact columns for A(" + std::to_string(n) +
                         "," + std::to_string(m) + ")");
  }
  return a;
}

template <class S>
DeviationTable<S>::DeviationTable(Weight<S> weight, int order) : weight_(std::move(weight)), order_(order)
{
  if (!weight_.nondegenerate) {
    throw DegenerateWeight("Verma module with h = " + to_string(weight_.h) + " is degenerate");
  }
}

template <class S>
const GradedOperator<S>& DeviationTable<S>::L(int n) const
{
  {
    std::shared_lock lock(mutex_);
    auto it = generators_.find(n);
    if (it != generators_.end()) {
      return *it->second;
    }
  }
  auto op = std::make_unique<GradedOperator<S>>(make_L(n, weight_, order_));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = generators_.emplace(n, std::move(op));
  return *it->second;
}

template <class S>
const GradedOperator<S>& DeviationTable<S>::get(int n, int m) const
{
  {
    std::shared_lock lock(mutex_);
    auto it = deviations_.find({n, m});
    if (it != deviations_.end()) {
      return *it->second;
    }
  }
  const auto& ln = L(n);
  const auto& lm = L(m);
  const auto& lnm = L(n + m);
  auto op = std::make_unique<GradedOperator<S>>(commutator(ln, lm) - from_int<S>(n - m) * lnm);
  if (op->valid_hi() < 0) {
    throw WindowExceeded("order " + std::to_string(order_) + " leaves no exact columns for A(" + std::to_string(n) +
                         "," + std::to_string(m) + ")");
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = deviations_.emplace(std::make_pair(n, m), std::move(op));
  return *it->second;
}

template <class S>
std::size_t DeviationTable<S>::cached_deviations() const
{
  std::shared_lock lock(mutex_);
  return deviations_.size();
}

template <class S>
S kappa(const Weight<S>& weight)
{
  const S& h = weight.h;
  return (from_int<S>(6) * h * h - from_int<S>(6) * h + from_int<S>(1)) / from_int<S>(6);
}

template <class S>
S FundamentalForm<S>::operator()(int i, int j) const
{
  if (i + j != 0) {
    return from_int<S>(0);
  }
  const S jj = from_int<S>(j);
  return kappa * (jj * jj * jj - jj);
}

template <class S>
FundamentalForm<S> fundamental_form(const Weight<S>& weight)
{
  return FundamentalForm<S>{kappa(weight)};
}

template <class S>
TailEstimate<S> fundamental_form_empirical(int n, const Weight<S>& weight, const std::vector<int>& cutoffs)
{
  check_ladder(cutoffs);
  const int need = cutoffs.back() - 1;
  const auto a = with_window<S>(need, need + 2 * std::abs(n) + 2,
                                [&](int order) { return deviation(n, -n, weight, order); });
  return trace_band0(a, cutoffs);
}

template <class S>
CentralCharge<S> central_charge(const Weight<S>& weight)
{
  CentralCharge<S> c;
  c.direct = from_int<S>(-12) * kappa(weight);
  if (weight.q_r) {
    c.from_qr = central_charge_from_qr(weight);
  }
  return c;
}

template <class S>
S central_charge_from_qr(const Weight<S>& weight)
{
  if (!weight.q_r) {
    throw UndefinedQR("q_R is undefined at h = 1/2");
  }
  const S& q = *weight.q_r;
  return from_int<S>(1) - from_int<S>(3) / (q * q);
}

template <class S>
S deviation_constant(const Weight<S>& weight)
{
  if (!weight.q_r) {
    throw UndefinedQR("q_R is undefined at h = 1/2");
  }
  return from_int<S>(-3) / (from_int<S>(2) * weight.h - from_int<S>(1));
}

template <class S>
IdentityCheck<S> identity_check(const Weight<S>& weight)
{
  IdentityCheck<S> r;
  r.alpha = deviation_constant(weight);
  r.c = central_charge(weight).direct;
  r.residual_27 = r.alpha * r.alpha * (from_int<S>(1) - r.c) - from_int<S>(27);
  r.residual_alpha_qr = r.alpha + from_int<S>(3) * *weight.q_r;
  return r;
}

std::vector<int> contraction_ladder(int M)
{
  std::vector<int> ladder;
  for (int div : {8, 4, 2, 1}) {
    const int m = M / div;
    if (m >= 4 && (ladder.empty() || m > ladder.back())) {
      ladder.push_back(m);
    }
  }
  if (ladder.empty() || ladder.back() != M) {
    ladder.push_back(M);
  }
  return ladder;
}

std::vector<int> ricci_cutoffs(const std::vector<int>& cutoffs, int M)
{
  check_ladder(cutoffs);
  std::vector<int> out = cutoffs;
  while (out.back() < 40 * M) {
    out.push_back(out.back() * 2);
  }
  return out;
}

namespace {

// Sums weight(m) * term(m) over the ordered pairs (Y, Z) = (e_{-m}, e_m),
// 2 <= |m| <= M, with weight(m) = 1/(2 alpha_{m,-m}).
template <class S, class Term>
Contraction<S> contract(const Weight<S>& w, int M, int order, int band, std::vector<int> columns, Term&& term)
{
  require_contraction_domain(w);
  if (M < 2) {
    throw std::invalid_argument("contraction cutoff M must be at least 2");
  }
  const auto ladder = contraction_ladder(M);
  const auto form = fundamental_form(w);
  Contraction<S> out{GradedOperator<S>(order), band, std::move(columns), {}};
  std::vector<std::vector<std::pair<int, S>>> samples(out.columns.size());
  for (int mm = 2; mm <= M; ++mm) {
    for (int m : {mm, -mm}) {
      GradedOperator<S> t = term(m);
      if (t.is_zero() && t.valid_hi() >= out.partial.valid_hi()) {
        continue;
      }
      const S weight = from_int<S>(1) / (from_int<S>(2) * form(m, -m));
      out.partial = out.partial + weight * t;
    }
    for (std::size_t i = 0; i < out.columns.size(); ++i) {
      samples[i].emplace_back(mm, out.partial.coeff(band, out.columns[i]));
    }
  }
  for (int col : out.columns) {
    if (col > out.partial.valid_hi()) {
      throw WindowExceeded("column " + std::to_string(col) + " outside contraction window [0, " +
                           std::to_string(out.partial.valid_hi()) + "]; raise the order");
    }
  }
  for (const auto& s : samples) {
    out.entries.push_back(make_contraction_estimate(s, ladder));
  }
  return out;
}

std::vector<int> columns_from(int first, int count)
{
  std::vector<int> cols;
  for (int i = 0; i < count; ++i) {
    cols.push_back(first + i);
  }
  return cols;
}

}  // namespace

template <class S>
Contraction<S> mean_deviation(const Weight<S>& weight, int M, int order, int degrees)
{
  return contract(weight, M, order, 0, columns_from(0, degrees),
                  [&](int m) { return deviation(-m, m, weight, order); });
}

template <class S>
Contraction<S> b_operator(int n, const Weight<S>& weight, int M, int order, int degrees)
{
  // [e_n, e_{-m}] = (n + m) e_{n-m}
  return contract(weight, M, order, -n, columns_from(std::max(n, 0), degrees), [&](int m) {
    if (n + m == 0 || deviation_vanishes(n - m, m)) {
      GradedOperator<S> zero(order);
      return zero;
    }
    return from_int<S>(n + m) * deviation(n - m, m, weight, order);
  });
}

template <class S>
Contraction<S> qhat(const std::function<S(int)>& q, const Weight<S>& weight, int M, int order, int degrees)
{
  require_contraction_domain(weight);
  const S inv_alpha = from_int<S>(1) / deviation_constant(weight);
  return contract(weight, M, order, 0, columns_from(0, degrees), [&](int m) {
    const S factor = inv_alpha * q(-m);
    if (is_zero(factor)) {
      GradedOperator<S> zero(order);
      return zero;
    }
    return factor * deviation(-m, m, weight, order);
  });
}

template <class S>
S dalpha(int n, int m, int k, const Weight<S>& weight)
{
  const auto a = fundamental_form(weight);
  // alpha_{X,[Y,Z]} with [e_m, e_k] = (m - k) e_{m+k}
  auto term = [&](int x, int y, int z) -> S { return from_int<S>(y - z) * a(x, y + z); };
  return term(n, m, k) + term(m, k, n) + term(k, n, m);
}

template <class S>
BetaDalpha<S> beta_and_dalpha(int n, int m, int k, const Weight<S>& weight, const std::vector<int>& cutoffs)
{
  check_ladder(cutoffs);
  BetaDalpha<S> r{zero_estimate<S>(cutoffs), dalpha(n, m, k, weight)};
  if (n + m + k != 0 || deviation_vanishes(m, k)) {
    return r;
  }
  const int need = cutoffs.back() - 1;
  const auto op = with_window<S>(need, need + 2 * total_abs({n, m, k}) + 2, [&](int order) {
    return commutator(make_L(n, weight, order), deviation(m, k, weight, order));
  });
  r.beta = trace_band0(op, cutoffs);
  return r;
}

template <class S>
TailEstimate<S> curvature_form(int n, int m, int u, int v, const Weight<S>& weight, const std::vector<int>& cutoffs)
{
  check_ladder(cutoffs);
  if (n + m + u + v != 0 || deviation_vanishes(n, m) || deviation_vanishes(u, v)) {
    return zero_estimate<S>(cutoffs);
  }
  const int need = cutoffs.back() - 1;
  const auto op = with_window<S>(need, need + 2 * total_abs({n, m, u, v}) + 2, [&](int order) {
    return deviation(n, m, weight, order) * deviation(u, v, weight, order);
  });
  return trace_band0(op, cutoffs);
}

template <class S>
RicciEstimate ricci(int kind, int n, int m, const Weight<S>& weight, int M, const std::vector<int>& cutoffs)
{
  if (kind != 1 && kind != 2) {
    throw std::invalid_argument("Ricci tensor kind must be 1 or 2");
  }
  check_ladder(cutoffs);
  const auto ladder = contraction_ladder(M);
  RicciEstimate r;
  if (n + m != 0) {
    std::vector<std::pair<int, Real>> zeros;
    for (int c : ladder) {
      zeros.emplace_back(c, Real(0));
    }
    r.contraction = make_tail_estimate(std::move(zeros));
    return r;
  }
  require_contraction_domain(weight);
  const auto form = fundamental_form(weight);
  const int need = cutoffs.back() - 1;
  const int order = need + 2 * (M + std::abs(n) + std::abs(m)) + 8;

  std::optional<GradedOperator<S>> axy;
  if (kind == 2 && !deviation_vanishes(n, m)) {
    axy = deviation(n, m, weight, order);
  }

  Real acc = 0;
  Real term_errors = 0;
  std::vector<std::pair<int, Real>> samples;
  for (int pp = 2; pp <= M; ++pp) {
    for (int p : {pp, -pp}) {
      const Real w = Real(1) / (Real(2) * to_real(form(p, -p)));
      std::optional<TailEstimate<S>> t;
      if (kind == 2) {
        // alpha^{ZV} R_{XY,ZV} with (Z, V) = (e_{-p}, e_p)
        if (axy && !deviation_vanishes(-p, p)) {
          const auto prod = *axy * deviation(-p, p, weight, order);
          t = trace_band0(prod, cutoffs);
        }
      } else {
        // alpha^{ZV} R_{XZ,YV} with (Z, V) = (e_{-p}, e_p)
        if (!deviation_vanishes(n, -p) && !deviation_vanishes(m, p)) {
          const auto prod = deviation(n, -p, weight, order) * deviation(m, p, weight, order);
          t = trace_band0(prod, cutoffs);
        }
      }
      if (t) {
        acc += w * t->extrapolated;
        term_errors += abs_of(w) * t->error_bound;
      }
    }
    samples.emplace_back(pp, acc);
  }
  r.contraction = make_contraction_estimate(samples, ladder);
  r.value = {r.contraction.extrapolated, r.contraction.error_bound + term_errors};
  const Real a = to_real(form(n, m));
  if (!is_negligible(a)) {
    r.rho = {r.value.value / a, r.value.error / abs_of(a)};
  }
  return r;
}

template <class S>
Estimate scalar_curvature(int i, int j, const Weight<S>& weight, const std::vector<int>& cutoffs)
{
  const auto form = fundamental_form(weight);
  const S denom = form(i, -i) * form(j, -j);
  if (is_negligible(denom)) {
    throw ZeroForm("alpha_{i,-i} alpha_{j,-j} vanishes for i = " + std::to_string(i) + ", j = " + std::to_string(j) +
                   " at h = " + to_string(weight.h));
  }
  const auto r = curvature_form(i, -j, j, -i, weight, cutoffs);
  const Real d = to_real(denom);
  return {r.extrapolated / d, r.error_bound / abs_of(d)};
}

template <class S>
Estimate ricci_identity_residual(int n, int m, int u, int v, const Weight<S>& weight, const std::vector<int>& cutoffs)
{
  Estimate e;
  for (const auto& t : {curvature_form(n, m, u, v, weight, cutoffs), curvature_form(m, u, n, v, weight, cutoffs),
                        curvature_form(u, n, m, v, weight, cutoffs)}) {
    e.value += t.extrapolated;
    e.error += t.error_bound;
  }
  return e;
}

template <class S>
GradedOperator<S> word_operator(const std::vector<int>& word, const Weight<S>& weight, int order)
{
  GradedOperator<S> op = GradedOperator<S>::identity(order);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    op = make_L(*it, weight, order) * op;
  }
  return op;
}

template <class S>
bool is_self_adjoint_word(const std::vector<int>& word, const Weight<S>& weight, int order)
{
  int degree = 0;
  for (int n : word) {
    degree += n;
  }
  if (degree != 0) {
    throw std::invalid_argument("word must have degree 0");
  }
  const auto op = word_operator(word, weight, order);
  const auto table = norm_table(weight, order);
  const auto adj = adjoint(op, table);
  return equal_on_window(op, adj);
}

template <class S>
ClosednessReport<S> closedness_check(const std::vector<int>& indices, const Weight<S>& weight,
                                     const std::vector<int>& cutoffs)
{
  if (indices.size() < 2) {
    throw std::invalid_argument("closedness check needs at least two generators");
  }
  check_ladder(cutoffs);
  ClosednessReport<S> r{0, from_int<S>(0), GradedOperator<S>(0), {}};
  r.witt_coefficient = witt_bracket_coefficient<S>(indices, r.witt_index);
  int spread = 0;
  for (int n : indices) {
    spread += 2 * std::abs(n);
  }
  const int need = cutoffs.back() - 1;
  r.remainder = with_window<S>(need, need + spread + 2, [&](int order) {
    GradedOperator<S> c = make_L(indices[0], weight, order);
    for (std::size_t i = 1; i < indices.size(); ++i) {
      c = commutator(c, make_L(indices[i], weight, order));
    }
    return c - r.witt_coefficient * make_L(r.witt_index, weight, order);
  });
  const auto table = norm_table(weight, r.remainder.order());
  r.remainder_hs = hs_norm_sq(r.remainder, table, cutoffs);
  return r;
}

#define QRCONF_INSTANTIATE(S)                                                                                   \
  template GradedOperator<S> deviation(int, int, const Weight<S>&, int);                                        \
  template class DeviationTable<S>;                                                                            \
  template S kappa(const Weight<S>&);                                                                           \
  template struct FundamentalForm<S>;                                                                           \
  template FundamentalForm<S> fundamental_form(const Weight<S>&);                                               \
  template TailEstimate<S> fundamental_form_empirical(int, const Weight<S>&, const std::vector<int>&);          \
  template CentralCharge<S> central_charge(const Weight<S>&);                                                   \
  template S central_charge_from_qr(const Weight<S>&);                                                          \
  template S deviation_constant(const Weight<S>&);                                                              \
  template IdentityCheck<S> identity_check(const Weight<S>&);                                                   \
  template Contraction<S> mean_deviation(const Weight<S>&, int, int, int);                                      \
  template Contraction<S> b_operator(int, const Weight<S>&, int, int, int);                                     \
  template Contraction<S> qhat(const std::function<S(int)>&, const Weight<S>&, int, int, int);                  \
  template S dalpha(int, int, int, const Weight<S>&);                                                           \
  template BetaDalpha<S> beta_and_dalpha(int, int, int, const Weight<S>&, const std::vector<int>&);             \
  template TailEstimate<S> curvature_form(int, int, int, int, const Weight<S>&, const std::vector<int>&);       \
  template RicciEstimate ricci(int, int, int, const Weight<S>&, int, const std::vector<int>&);                  \
  template Estimate scalar_curvature(int, int, const Weight<S>&, const std::vector<int>&);                      \
  template Estimate ricci_identity_residual(int, int, int, int, const Weight<S>&, const std::vector<int>&);      \
  template GradedOperator<S> word_operator(const std::vector<int>&, const Weight<S>&, int);                      \
  template bool is_self_adjoint_word(const std::vector<int>&, const Weight<S>&, int);                           \
  template ClosednessReport<S> closedness_check(const std::vector<int>&, const Weight<S>&, const std::vector<int>&);

QRCONF_INSTANTIATE(Rational)
QRCONF_INSTANTIATE(Real)

#undef QRCONF_INSTANTIATE

}  // namespace qrconf
