#include "qrconf/generators.hpp"
#include "qrconf/graded_operator.hpp"
#include "qrconf/tail_estimate.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qrconf;

namespace {

using Op = GradedOperator<Rational>;
using Vec = GradedVector<Rational>;

Rational q(long p, long d = 1) { return from_ratio<Rational>(p, d); }

constexpr int kOrder = 40;

struct Fixture
{
  Weight<Rational> w;
  NormTable<Rational> t;
  explicit Fixture(const Rational& h) : w(classify_weight(h)), t(norm_table(w, kOrder)) {}
  Op l(int i) const { return make_l(i, w, kOrder); }
  Op L(int n) const { return make_L(n, w, kOrder); }
  Op D() const { return make_D(w, kOrder); }
  Op F() const { return make_F(w, kOrder); }
  Op id() const { return Op::identity(kOrder); }
};

Op power(const Op& a, int m)
{
  Op r = Op::identity(a.order());
  for (int i = 0; i < m; ++i) {
    r = r * a;
  }
  return r;
}

Vec mono(int k, Rational c = 1) { return Vec::monomial(kOrder, k, std::move(c)); }

// Degree of a single-band operator.
int degree(const Op& a)
{
  EXPECT_EQ(a.min_band(), a.max_band());
  return a.max_band();
}

}  // namespace

TEST(Generators, FOnVacuum)
{
  Fixture f(q(2));
  EXPECT_EQ(apply(f.F(), mono(0)), mono(1, q(1, 4)));
}

TEST(Generators, L2OnCube)
{
  Fixture f(q(2));
  EXPECT_EQ(apply(f.L(2), mono(3)), mono(1, 42));
}

TEST(Generators, LMinus2OnVacuum)
{
  Fixture f(q(2));
  EXPECT_EQ(apply(f.L(-2), mono(0)), mono(2, q(3, 10)));
}

TEST(Generators, SlTwoAgreesWithLowModes)
{
  Fixture f(q(7, 3));
  for (int i : {-1, 0, 1}) {
    EXPECT_TRUE(equal_on_window(f.l(i), f.L(i))) << i;
  }
  EXPECT_TRUE(equal_on_window(f.D(), make_J(1, f.w, kOrder)));
  EXPECT_TRUE(equal_on_window(f.F(), make_J(-1, f.w, kOrder)));
  EXPECT_TRUE(equal_on_window(power(f.F(), 3), make_J(-3, f.w, kOrder)));
}

TEST(Generators, DegenerateWeightThrows)
{
  EXPECT_THROW(make_F(classify_weight(q(-1)), 10), DegenerateWeight);
}

TEST(Apply, Examples)
{
  Fixture f(q(2));
  EXPECT_EQ(apply(f.l(0), mono(3)), mono(3, 5));
  EXPECT_EQ(apply(f.D(), mono(5)), mono(4, 5));
  Vec v(kOrder);
  for (int k = 0; k <= kOrder; ++k) {
    v.coeff[k] = q(k * k - 3, k + 1);
  }
  EXPECT_EQ(apply(f.id(), v), v);
}

TEST(Apply, OutsideWindowThrows)
{
  Fixture f(q(2));
  const Op p = f.L(3) * f.L(-3);
  EXPECT_THROW(apply(p, mono(kOrder)), WindowExceeded);
}

TEST(Combine, DFCommutatorOnVacuum)
{
  Fixture f(q(2));
  const Op lhs = commutator(f.D(), f.F());
  const Op rhs = *f.w.q_r * ((f.id() - f.D() * f.F()) * (f.id() - f.F() * f.D()));
  EXPECT_EQ(apply(lhs, mono(0)), mono(0, q(1, 4)));
  EXPECT_EQ(apply(rhs, mono(0)), mono(0, q(1, 4)));
}

TEST(Combine, SlTwoRelations)
{
  Fixture f(q(5, 3));
  EXPECT_TRUE(equal_on_window(commutator(f.l(0), f.l(-1)), f.l(-1)));
  EXPECT_TRUE(equal_on_window(commutator(f.l(1), f.l(0)), f.l(1)));
  EXPECT_TRUE(equal_on_window(commutator(f.l(1), f.l(-1)), q(2) * f.l(0)));
}

TEST(Combine, DiagonalProductsCommute)
{
  Fixture f(q(2));
  EXPECT_TRUE(vanishes_on_window(commutator(f.F() * f.D(), f.D() * f.F())));
}

TEST(Combine, BerezinRelations)
{
  for (const Rational& h : {q(2), q(3, 4), q(-3, 4), q(11, 5)}) {
    Fixture f(h);
    const Op D = f.D(), F = f.F();
    EXPECT_TRUE(equal_on_window(commutator(D, F), *f.w.q_r * ((f.id() - D * F) * (f.id() - F * D))));
    EXPECT_TRUE(equal_on_window(commutator(f.l(-1), D), q(-1) * f.id()));
    EXPECT_TRUE(equal_on_window(commutator(f.l(0), D), q(-1) * D));
    EXPECT_TRUE(equal_on_window(commutator(f.l(1), D), q(-1) * (D * D)));
    EXPECT_TRUE(equal_on_window(commutator(f.l(1), F), f.id()));
    EXPECT_TRUE(equal_on_window(commutator(f.l(0), F), F));
    EXPECT_TRUE(equal_on_window(commutator(f.l(-1), F), F * F));
  }
}

TEST(Combine, FRowAsPrintedIsDegreeInconsistent)
{
  // Reading the F row with l_{-1} and l_1 swapped pairs operators of
  // different degree, so it cannot hold on any window.
  Fixture f(q(2));
  const Op lhs = commutator(f.l(-1), f.F());
  EXPECT_EQ(degree(lhs), 2);
  EXPECT_EQ(degree(f.id()), 0);
  EXPECT_FALSE(equal_on_window(lhs, f.id()));
  EXPECT_EQ(degree(commutator(f.l(1), f.F())), 0);
  EXPECT_FALSE(equal_on_window(commutator(f.l(1), f.F()), f.F() * f.F()));
}

TEST(Combine, PowerRelations)
{
  Fixture f(q(9, 4));
  for (int n = -1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      EXPECT_TRUE(equal_on_window(commutator(f.L(n), power(f.D(), m)), q(-m) * power(f.D(), n + m)))
          << n << ' ' << m;
      EXPECT_TRUE(equal_on_window(commutator(f.L(-n), power(f.F(), m)), q(m) * power(f.F(), n + m)))
          << n << ' ' << m;
    }
  }
}

TEST(Combine, SlTwoActsLikeWitt)
{
  Fixture f(q(2));
  for (int i : {-1, 0, 1}) {
    for (int n = -6; n <= 6; ++n) {
      EXPECT_TRUE(equal_on_window(commutator(f.l(i), f.L(n)), q(i - n) * f.L(i + n))) << i << ' ' << n;
    }
  }
}

TEST(Combine, OrderMismatchThrows)
{
  const auto w = classify_weight(q(2));
  EXPECT_THROW(make_D(w, 10) + make_D(w, 11), DimensionMismatch);
}

TEST(Adjoint, DIsAdjointToF)
{
  Fixture f(q(2));
  EXPECT_TRUE(equal_on_window(adjoint(f.D(), f.t), f.F()));
  EXPECT_TRUE(equal_on_window(adjoint(f.F(), f.t), f.D()));
}

TEST(Adjoint, LnAdjointIsLMinusN)
{
  for (const Rational& h : {q(2), q(3, 4), q(-3, 4)}) {
    Fixture f(h);
    for (int n = -4; n <= 4; ++n) {
      EXPECT_TRUE(equal_on_window(adjoint(f.L(n), f.t), f.L(-n))) << n;
    }
  }
}

TEST(Adjoint, IsAnInvolutionAndDefinesTheForm)
{
  Fixture f(q(5, 7));
  const Op a = f.L(3) * f.F() + f.D() * f.L(-2);
  const Op b = adjoint(a, f.t);
  EXPECT_TRUE(equal_on_window(adjoint(b, f.t), a, std::min(a.valid_hi(), b.valid_hi()) - 6));
  for (int j = 0; j < 8; ++j) {
    for (int k = 0; k < 8; ++k) {
      EXPECT_EQ(inner_product(mono(j), apply(a, mono(k)), f.t), inner_product(apply(b, mono(j)), mono(k), f.t));
    }
  }
}

TEST(TraceBand0, FiniteCommutatorIsZero)
{
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-20, 20);
  const int n = 12;
  Op a(n), b(n);
  for (int d = -3; d <= 3; ++d) {
    for (int k = Op::column_lo(n, d); k <= Op::column_hi(n, d); ++k) {
      a.set(d, k, q(c(rng), 3));
      b.set(-d, Op::column_lo(n, -d) + (k - Op::column_lo(n, d)), c(rng));
    }
  }
  Op comm = commutator(a, b);
  comm.set_valid_hi(n);  // finite matrices: the truncation is the operator
  const auto t = trace_band0(comm, {n + 1});
  EXPECT_EQ(t.last(), 0);
  EXPECT_EQ(t.extrapolated, 0);
}

TEST(TraceBand0, NoDiagonalBandIsExactlyZero)
{
  Fixture f(q(2));
  const auto t = trace_band0(f.L(3), {8, 16, 32});
  EXPECT_EQ(t.last(), 0);
  EXPECT_EQ(t.extrapolated, 0);
  EXPECT_EQ(t.error_bound, 0);
  EXPECT_FALSE(t.diverges);
}

TEST(TraceBand0, PartialSumsAndErrors)
{
  Fixture f(q(2));
  const auto t = trace_band0(f.l(0), {4, 8, 16});
  EXPECT_EQ(t.partial_sums[0].second, 0 + 1 + 2 + 3 + 4 * 2);
  EXPECT_TRUE(t.diverges);
  EXPECT_THROW(trace_band0(f.l(0), {8, 4}), std::invalid_argument);
  EXPECT_THROW(trace_band0(f.l(0), {kOrder + 2}), WindowExceeded);
}

TEST(HsNorm, Examples)
{
  Fixture f(q(2));
  const auto zero = hs_norm_sq(Op(kOrder), f.t, {8, 16, 32});
  EXPECT_EQ(zero.last(), 0);
  EXPECT_FALSE(zero.diverges);
  EXPECT_TRUE(hs_norm_sq(f.L(2), f.t, {8, 16, 32}).diverges);
  // ||D z^k||^2 / ||z^k||^2 = k^2 g[k-1]/g[k] = k/(k-1+2h).
  const auto d = hs_norm_sq(f.D(), f.t, {4});
  EXPECT_EQ(d.last(), q(1, 4) + q(2, 5) + q(3, 6));
}

TEST(HsNorm, IndefiniteFormThrows)
{
  Fixture f(q(-3, 4));
  EXPECT_THROW(hs_norm_sq(f.D(), f.t, {8}), DegenerateWeight);
}

TEST(Extrapolation, RecoversPolynomialTail)
{
  std::vector<std::pair<int, Real>> s;
  for (int c : {64, 128, 256, 512}) {
    const Real x = Real(1) / c;
    s.emplace_back(c, Real(3) + 2 * x - 5 * x * x);
  }
  const auto [limit, err] = extrapolate_reciprocal(s);
  EXPECT_LT(abs_of(limit - 3), Real("1e-30"));
  EXPECT_LT(err, Real("1e-30"));
}

TEST(Extrapolation, RecoversLogarithmicTail)
{
  std::vector<std::pair<int, Real>> s;
  for (int m = 2; m <= 400; ++m) {
    const Real x = Real(1) / m;
    s.emplace_back(m, Real(-1) + 2 * log(Real(m)) * x - 3 * x + log(Real(m)) * x * x);
  }
  const auto [limit, err] = extrapolate_log_reciprocal(s);
  EXPECT_LT(abs_of(limit + 1), Real("1e-9"));
  EXPECT_LT(err, Real("1e-6"));
}
