#include "qrconf/witt.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qrconf;

namespace {

Rational q(long p, long d = 1) { return from_ratio<Rational>(p, d); }

WittElement e(int n, GaussRational c = 1) { return WittElement::basis(n, std::move(c)); }

VirasoroElement ve(int n) { return {e(n), GaussRational()}; }

WittElement random_witt(std::mt19937& rng)
{
  std::uniform_int_distribution<int> idx(-6, 6), coef(-5, 5), len(1, 4);
  WittElement x;
  for (int i = len(rng); i > 0; --i) {
    x.add(idx(rng), GaussRational(Rational(coef(rng)), Rational(coef(rng))));
  }
  return x;
}

}  // namespace

TEST(WittBracket, Examples)
{
  EXPECT_EQ(witt_bracket(e(2), e(3)), e(5, -1));
  EXPECT_EQ(witt_bracket(e(1), e(-1)), e(0, 2));
  const WittElement x = e(3, GaussRational(q(1, 2), q(-2))) + e(-4, 7);
  EXPECT_TRUE(witt_bracket(x, x).is_zero());
}

TEST(WittBracket, AntisymmetryAndJacobi)
{
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_witt(rng), y = random_witt(rng), z = random_witt(rng);
    EXPECT_EQ(witt_bracket(x, y), GaussRational(-1) * witt_bracket(y, x));
    const auto j = witt_bracket(x, witt_bracket(y, z)) + witt_bracket(y, witt_bracket(z, x)) +
                   witt_bracket(z, witt_bracket(x, y));
    EXPECT_TRUE(j.is_zero());
  }
}

TEST(VirasoroBracket, Examples)
{
  EXPECT_EQ(virasoro_bracket(ve(2), ve(-2)), (VirasoroElement{e(0, 4), GaussRational(q(1, 2))}));
  EXPECT_EQ(virasoro_bracket(ve(1), ve(-1)), (VirasoroElement{e(0, 2), GaussRational()}));
}

TEST(VirasoroBracket, Jacobi)
{
  auto jac = [](const VirasoroElement& x, const VirasoroElement& y, const VirasoroElement& z) {
    const auto a = virasoro_bracket(x, virasoro_bracket(y, z));
    const auto b = virasoro_bracket(y, virasoro_bracket(z, x));
    const auto c = virasoro_bracket(z, virasoro_bracket(x, y));
    return VirasoroElement{a.witt + b.witt + c.witt, a.central + b.central + c.central};
  };
  EXPECT_EQ(jac(ve(2), ve(-3), ve(1)), (VirasoroElement{}));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const VirasoroElement x{random_witt(rng), 3}, y{random_witt(rng), 0}, z{random_witt(rng), -1};
    EXPECT_EQ(jac(x, y, z), (VirasoroElement{}));
  }
}

TEST(Cocycle, ModifiedExamples)
{
  EXPECT_EQ(gf_cocycle_modified(e(2), e(-2)), GaussRational(q(1, 2)));
  EXPECT_EQ(gf_cocycle_modified(e(1), e(-1)), GaussRational());
  EXPECT_EQ(gf_cocycle_modified(e(3), e(-3)), GaussRational(2));
  EXPECT_EQ(gf_cocycle_modified(e(3), e(-2)), GaussRational());
}

TEST(Cocycle, ModifiedIsSlTwoInvariantAndClosed)
{
  for (int k = -20; k <= 20; ++k) {
    for (int i : {-1, 0, 1}) {
      EXPECT_TRUE(gf_cocycle_modified(e(i), e(k)).is_zero());
    }
  }
  std::mt19937 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_witt(rng), y = random_witt(rng), z = random_witt(rng);
    EXPECT_EQ(gf_cocycle_modified(x, y), GaussRational(-1) * gf_cocycle_modified(y, x));
    const auto s = gf_cocycle_modified(witt_bracket(x, y), z) + gf_cocycle_modified(witt_bracket(y, z), x) +
                   gf_cocycle_modified(witt_bracket(z, x), y);
    EXPECT_TRUE(s.is_zero());
  }
}

TEST(Cocycle, RawExamples)
{
  const auto v2 = vector_field_profile(e(2));
  const auto vm2 = vector_field_profile(e(-2));
  EXPECT_EQ(gf_cocycle_raw(v2, vm2), (PiMultiple{GaussRational(q(0), q(32))}));
  const auto v0 = vector_field_profile(e(0));
  for (int k = -5; k <= 5; ++k) {
    EXPECT_TRUE(gf_cocycle_raw(v0, vector_field_profile(e(k))).coeff.is_zero());
  }
  const FourierDensity v{{1, GaussRational(q(2), q(1))}, {-3, 5}, {4, GaussRational(q(0), q(-1, 3))}};
  EXPECT_TRUE(gf_cocycle_raw(v, v).coeff.is_zero());
}

TEST(Cocycle, RawDiffersFromModifiedByCoboundary)
{
  for (int j = -6; j <= 6; ++j) {
    const auto a = vector_field_profile(e(j));
    const auto b = vector_field_profile(e(-j));
    const auto diff = gf_cocycle_raw(a, b).coeff - trivial_cocycle(a, b).coeff;
    EXPECT_EQ(diff, GaussRational(q(0), q(48)) * gf_cocycle_modified(e(j), e(-j))) << j;
  }
}

TEST(CoboundaryWitness, Examples)
{
  const auto w2 = coboundary_witness(2);
  EXPECT_EQ(w2.raw, 8);
  EXPECT_EQ(w2.trivial, 2);
  EXPECT_EQ(w2.raw - w2.trivial, 6);
  const auto w1 = coboundary_witness(1);
  EXPECT_EQ(w1.raw, 1);
  EXPECT_EQ(w1.trivial, 1);
  const auto w0 = coboundary_witness(0);
  EXPECT_EQ(w0.raw, 0);
  EXPECT_EQ(w0.trivial, 0);
  for (int j = 0; j <= 10; ++j) {
    const auto w = coboundary_witness(j);
    EXPECT_EQ(w.raw - w.trivial, Rational(j * j * j - j));
  }
}

TEST(RealBasis, Examples)
{
  EXPECT_EQ(real_basis_bracket(RealWittElement::rotation(), RealWittElement::sine(2)), RealWittElement::cosine(2, 2));
  EXPECT_EQ(real_basis_bracket(RealWittElement::sine(2), RealWittElement::cosine(2)),
            RealWittElement::rotation(-2));
  RealWittElement expected;
  expected.s.add(3, q(1, 2));
  expected.s.add(1, q(-3, 2));
  EXPECT_EQ(real_basis_bracket(RealWittElement::sine(1), RealWittElement::sine(2)), expected);
}

TEST(RealBasis, RotationActsByDerivative)
{
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(real_basis_bracket(RealWittElement::rotation(), RealWittElement::sine(n)),
              RealWittElement::cosine(n, n));
    EXPECT_EQ(real_basis_bracket(RealWittElement::rotation(), RealWittElement::cosine(n)),
              RealWittElement::sine(n, -n));
  }
}

TEST(RealBasis, RoundTrip)
{
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> idx(1, 8), coef(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    RealWittElement x;
    x.s.add(idx(rng), GaussRational(Rational(coef(rng)), q(coef(rng), 2)));
    x.c.add(idx(rng), coef(rng));
    x.h = GaussRational(q(coef(rng), 3));
    EXPECT_EQ(to_real_basis(to_witt(x)), x);
  }
  std::mt19937 rng2(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto w = random_witt(rng2);
    EXPECT_EQ(to_witt(to_real_basis(w)), w);
  }
}

TEST(RealBasis, SineIsCombinationOfModes)
{
  const WittElement s2 = to_witt(RealWittElement::sine(2));
  EXPECT_EQ(s2, e(-2, q(1, 2)) + e(2, q(-1, 2)));
  EXPECT_EQ(to_witt(RealWittElement::rotation()), e(0, GaussRational(q(0), q(-1))));
}
