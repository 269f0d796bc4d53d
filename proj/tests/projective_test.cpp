#include "qrconf/projective.hpp"

#include <gtest/gtest.h>

#include <future>
#include <random>

using namespace qrconf;

namespace {

Rational q(long p, long d = 1) { return from_ratio<Rational>(p, d); }

const std::vector<int> kShortLadder{32, 64, 128, 256};

Weight<Rational> wq(const Rational& h) { return classify_weight(h); }

Weight<Real> wr(long p, long d = 1) { return classify_weight(Real(p) / d); }

Weight<Real> root_weight() { return classify_weight(Real(1) / 2 + sqrt(Real(3)) / 6); }

}  // namespace

TEST(Deviation, ExamplesAtTwo)
{
  const auto w = wq(q(2));
  EXPECT_TRUE(deviation(1, 2, w, 30).is_zero());
  EXPECT_EQ(deviation(2, -2, w, 30).coeff(0, 0), q(-22, 5));
  EXPECT_EQ(deviation(-2, 2, w, 30).coeff(0, 0), q(22, 5));
}

TEST(Deviation, VanishingRangesAndAntisymmetry)
{
  const auto w = wq(q(5, 2));
  const int order = 120;
  for (int n = -8; n <= 8; ++n) {
    for (int m = -8; m <= 8; ++m) {
      const auto a = deviation(n, m, w, order);
      if ((n >= -1 && m >= -1) || (n <= 1 && m <= 1)) {
        EXPECT_TRUE(vanishes_on_window(a)) << n << ' ' << m;
      }
      const auto b = deviation(m, n, w, order);
      EXPECT_TRUE(vanishes_on_window(a + b)) << n << ' ' << m;
    }
  }
}

TEST(Deviation, DegenerateWeightThrows)
{
  EXPECT_THROW(deviation(2, -2, wq(q(-1)), 20), DegenerateWeight);
}

TEST(DeviationTable, CachesAndServesConcurrentReaders)
{
  const DeviationTable<Rational> table(wq(q(2)), 60);
  std::vector<std::future<bool>> jobs;
  for (int t = 0; t < 8; ++t) {
    jobs.push_back(std::async(std::launch::async, [&table, t] {
      const int n = 2 + t % 4;
      return equal_on_window(table.get(n, -n), deviation(n, -n, table.weight(), 60));
    }));
  }
  for (auto& j : jobs) {
    EXPECT_TRUE(j.get());
  }
  EXPECT_EQ(table.cached_deviations(), 4u);
}

TEST(FundamentalForm, Closed)
{
  const auto f = fundamental_form(wq(q(2)));
  EXPECT_EQ(f.kappa, q(13, 6));
  EXPECT_EQ(f(2, -2), -13);
  EXPECT_EQ(f(3, -3), -52);
  EXPECT_EQ(f(4, -4), -130);
  EXPECT_EQ(f(2, -3), 0);
  EXPECT_EQ(f(1, -1), 0);
}

TEST(FundamentalForm, EmpiricalMatchesClosed)
{
  const auto w = wq(q(2));
  const auto t = fundamental_form_empirical(2, w, kShortLadder);
  EXPECT_FALSE(t.diverges);
  EXPECT_LT(abs_of(t.extrapolated + 13), Real("1e-4"));
  EXPECT_LT(abs_of(t.extrapolated + 13), t.error_bound * 10 + Real("1e-12"));
}

TEST(CentralCharge, Examples)
{
  const auto c = central_charge(wq(q(2)));
  EXPECT_EQ(c.direct, -26);
  ASSERT_TRUE(c.from_qr);
  EXPECT_EQ(*c.from_qr, -26);
  EXPECT_FALSE(central_charge(wq(q(1, 2))).from_qr);
  EXPECT_THROW(central_charge_from_qr(wq(q(1, 2))), UndefinedQR);
}

TEST(CentralCharge, VanishesAtRootInFloatMode)
{
  EXPECT_LT(abs_of(central_charge(root_weight()).direct), Real("1e-12"));
}

TEST(CentralCharge, FormulasAgreeOnRandomWeights)
{
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> num(-200, 200), den(1, 60);
  for (int trial = 0; trial < 20; ++trial) {
    Rational h(num(rng), den(rng));
    h.canonicalize();
    if (h == q(1, 2)) {
      continue;
    }
    const auto c = central_charge(wq(h));
    EXPECT_EQ(c.direct, *c.from_qr) << to_string(h);
    const auto id = identity_check(wq(h));
    EXPECT_EQ(id.residual_27, 0);
    EXPECT_EQ(id.residual_alpha_qr, 0);
  }
}

TEST(DeviationConstant, Closed)
{
  EXPECT_EQ(deviation_constant(wq(q(2))), -1);
  EXPECT_EQ(deviation_constant(wq(q(5, 2))), q(-3, 4));
  EXPECT_THROW(deviation_constant(wq(q(1, 2))), UndefinedQR);
}

TEST(IdentityCheck, Examples)
{
  const auto two = identity_check(wq(q(2)));
  EXPECT_EQ(two.alpha, -1);
  EXPECT_EQ(two.c, -26);
  EXPECT_EQ(two.residual_27, 0);
  const auto tq = identity_check(wq(q(3, 4)));
  EXPECT_EQ(tq.alpha, -6);
  EXPECT_EQ(tq.residual_27, 0);
  EXPECT_THROW(identity_check(wq(q(1, 2))), UndefinedQR);
}

TEST(BetaDalpha, Examples)
{
  const auto w = wq(q(2));
  EXPECT_EQ(dalpha(2, 3, -5, w), 0);
  const auto r = beta_and_dalpha(2, 3, -5, w, {512, 1024, 2048, 4096});
  EXPECT_EQ(r.dalpha, 0);
  EXPECT_LT(abs_of(r.beta.extrapolated), Real("1e-6"));
  const auto sl = beta_and_dalpha(-1, 0, 1, w, kShortLadder);
  EXPECT_EQ(sl.beta.extrapolated, 0);
  EXPECT_EQ(sl.dalpha, 0);
}

TEST(BetaDalpha, DalphaVanishesOnRandomTriples)
{
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> idx(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    EXPECT_EQ(dalpha(idx(rng), idx(rng), idx(rng), wq(q(7, 3))), 0);
  }
}

TEST(CurvatureForm, Examples)
{
  const auto w = wq(q(2));
  const auto off = curvature_form(2, -2, 3, -2, w, kShortLadder);
  EXPECT_EQ(off.extrapolated, 0);
  EXPECT_EQ(off.last(), 0);
  const auto r = curvature_form(2, -2, 2, -2, w, kShortLadder);
  EXPECT_GT(r.extrapolated, 0);
  // A_{2,-2} is self-adjoint, so R_{2,-2,2,-2} is its squared HS norm.
  const auto a = deviation(2, -2, w, 300);
  const auto hs = hs_norm_sq(a, norm_table(w, 300), kShortLadder);
  EXPECT_LT(abs_of(hs.extrapolated - r.extrapolated), r.error_bound + hs.error_bound + Real("1e-8"));
}

TEST(ScalarCurvature, Examples)
{
  const auto w = wq(q(2));
  const auto k22 = scalar_curvature(2, 2, w, kShortLadder);
  const auto r = curvature_form(2, -2, 2, -2, w, kShortLadder);
  EXPECT_GT(k22.value, 0);
  EXPECT_LT(abs_of(k22.value - r.extrapolated / 169), Real("1e-20"));
  const auto k23 = scalar_curvature(2, 3, w, kShortLadder);
  const auto k32 = scalar_curvature(3, 2, w, kShortLadder);
  EXPECT_LE(abs_of(k23.value - k32.value), k23.error + k32.error + Real("1e-20"));
  EXPECT_THROW(scalar_curvature(2, 2, root_weight(), kShortLadder), ZeroForm);
}

TEST(Contraction, Ladder)
{
  EXPECT_EQ(contraction_ladder(100), (std::vector<int>{12, 25, 50, 100}));
  EXPECT_EQ(contraction_ladder(20), (std::vector<int>{5, 10, 20}));
}

TEST(MeanDeviation, ApproachesDeviationConstant)
{
  const auto c = mean_deviation(wr(2), 60, 600, 10);
  for (const auto& [d, b] : c.partial.bands()) {
    EXPECT_EQ(d, 0);
  }
  ASSERT_EQ(c.entries.size(), 10u);
  for (const auto& e : c.entries) {
    EXPECT_FALSE(e.diverges);
    EXPECT_LT(abs_of(e.extrapolated + 1), Real("1e-2"));
  }
}

TEST(MeanDeviation, DomainErrors)
{
  EXPECT_THROW(mean_deviation(wr(2, 5), 20, 200), ConvergenceDomain);
  EXPECT_THROW(mean_deviation(wq(q(1, 2)), 20, 200), ConvergenceDomain);
  EXPECT_THROW(mean_deviation(root_weight(), 20, 200), ZeroForm);
}

TEST(Qhat, ZeroMapGivesZeroOperator)
{
  const auto c = qhat<Real>([](int) { return Real(0); }, wr(2), 20, 200);
  EXPECT_TRUE(c.partial.is_zero());
  for (const auto& e : c.entries) {
    EXPECT_EQ(e.extrapolated, 0);
  }
}

TEST(Qhat, AdjointOfRotationCancels)
{
  const auto c = qhat<Real>([](int k) { return Real(-k); }, wr(2), 20, 200);
  for (const auto& e : c.entries) {
    EXPECT_LT(abs_of(e.extrapolated), Real("1e-30"));
  }
}

TEST(BOperator, ZeroModeVanishesBySymmetry)
{
  const auto b = b_operator(0, wr(2), 20, 200);
  for (const auto& e : b.entries) {
    EXPECT_LT(abs_of(e.extrapolated), Real("1e-30"));
  }
}

TEST(Ricci, OffPairingIsExactlyZero)
{
  const auto r = ricci(2, 2, -3, wr(2), 20, {64, 128});
  EXPECT_EQ(r.value.value, 0);
  EXPECT_EQ(r.rho.value, 0);
}

TEST(Ricci, SecondKindApproachesAlpha)
{
  const auto r = ricci(2, 2, -2, wr(2), 100, {256, 512, 1024, 2048});
  EXPECT_LT(abs_of(r.rho.value + 1), Real("1e-3"));
}

TEST(RicciIdentity, SlTwoRangeIsZero)
{
  const auto r = ricci_identity_residual(-1, 0, 1, 1, wq(q(2)), kShortLadder);
  EXPECT_EQ(r.value, 0);
  EXPECT_EQ(r.error, 0);
}

TEST(Symmetry, DegreeZeroWordsAreSelfAdjoint)
{
  const auto w = wq(q(2));
  EXPECT_TRUE(is_self_adjoint_word({2, -2}, w, 60));
  EXPECT_TRUE(is_self_adjoint_word({3, 1, -4}, w, 60));
  EXPECT_TRUE(is_self_adjoint_word({1, -1}, w, 60));
  EXPECT_TRUE(equal_on_window(word_operator({1, -1}, w, 60), make_l(1, w, 60) * make_l(-1, w, 60)));
}

TEST(Closedness, IteratedCommutatorRemainderIsHilbertSchmidt)
{
  const auto r = closedness_check({2, -3, 1}, wq(q(2)), kShortLadder);
  EXPECT_EQ(r.witt_index, 0);
  EXPECT_EQ(r.witt_coefficient, -10);
  EXPECT_FALSE(r.remainder_hs.diverges);
}

TEST(Ricci, CutoffsReachFortyTimesTheContraction)
{
  EXPECT_EQ(ricci_cutoffs({256, 512, 1024, 2048, 4096}, 100), (std::vector<int>{256, 512, 1024, 2048, 4096}));
  EXPECT_EQ(ricci_cutoffs({256, 512, 1024, 2048, 4096}, 200),
            (std::vector<int>{256, 512, 1024, 2048, 4096, 8192}));
  EXPECT_THROW(ricci_cutoffs({}, 10), std::invalid_argument);
}
