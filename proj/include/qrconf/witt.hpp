#pragma once

// Witt and Virasoro algebras.
//
// Complex basis e_n = i e^{int} d/dt = z^{n+1} d/dz with [e_j, e_k] = (j-k) e_{j+k}.
// Real basis s_n = sin(nt) d/dt, c_n = cos(nt) d/dt (n >= 1) and h = d/dt, with
//   s_n = (e_{-n} - e_n)/2,  c_n = -i (e_n + e_{-n})/2,  h = -i e_0.
// Vector fields bracket as [v1 d/dt, v2 d/dt] = (v1 v2' - v1' v2) d/dt.

#include "qrconf/scalar.hpp"

#include <map>
#include <ostream>
#include <string>

namespace qrconf {

/// Exact Gaussian rational re + i im.
struct GaussRational
{
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit from rationals is intended
  GaussRational(int r) : re(r) {}                  // NOLINT
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussRational conj() const { return {re, -im}; }

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

std::string to_string(const GaussRational& z);
std::ostream& operator<<(std::ostream& os, const GaussRational& z);

/// Finitely supported map from an integer index to a coefficient; zero
/// coefficients are never stored.
class SparseSeries
{
public:
  using Map = std::map<int, GaussRational>;

  SparseSeries() = default;
  SparseSeries(std::initializer_list<std::pair<const int, GaussRational>> init);

  const Map& terms() const { return terms_; }
  GaussRational operator[](int n) const;
  void add(int n, const GaussRational& c);
  bool is_zero() const { return terms_.empty(); }

  SparseSeries& operator+=(const SparseSeries& o);
  SparseSeries& operator-=(const SparseSeries& o);
  friend SparseSeries operator+(SparseSeries a, const SparseSeries& b) { return a += b; }
  friend SparseSeries operator-(SparseSeries a, const SparseSeries& b) { return a -= b; }
  friend SparseSeries operator*(const GaussRational& c, const SparseSeries& a);
  friend bool operator==(const SparseSeries& a, const SparseSeries& b) { return a.terms_ == b.terms_; }

private:
  Map terms_;
};

/// Element of the complexified Witt algebra in the basis e_n.
struct WittElement : SparseSeries
{
  using SparseSeries::SparseSeries;
  WittElement() = default;
  WittElement(SparseSeries s) : SparseSeries(std::move(s)) {}  // NOLINT

  static WittElement basis(int n, GaussRational c = 1) { return WittElement{{n, c}}; }
};

/// Witt part plus the coefficient of the central element c.
struct VirasoroElement
{
  WittElement witt;
  GaussRational central;

  friend bool operator==(const VirasoroElement& a, const VirasoroElement& b)
  {
    return a.witt == b.witt && a.central == b.central;
  }
};

/// Element in the real basis s_n, c_n (n >= 1) and h, with complex
/// coefficients so that every Witt element is representable.
struct RealWittElement
{
  SparseSeries s;
  SparseSeries c;
  GaussRational h;

  static RealWittElement sine(int n, GaussRational k = 1);
  static RealWittElement cosine(int n, GaussRational k = 1);
  static RealWittElement rotation(GaussRational k = 1);

  friend bool operator==(const RealWittElement& a, const RealWittElement& b)
  {
    return a.s == b.s && a.c == b.c && a.h == b.h;
  }
};

std::ostream& operator<<(std::ostream& os, const RealWittElement& x);

WittElement witt_bracket(const WittElement& x, const WittElement& y);

/// Virasoro bracket with the sl(2)-invariant cocycle (j^3 - j)/12.
VirasoroElement virasoro_bracket(const VirasoroElement& x, const VirasoroElement& y);

/// Modified Gelfand-Fuchs cocycle: sum_j x_j y_{-j} (j^3 - j)/12.
GaussRational gf_cocycle_modified(const WittElement& x, const WittElement& y);

/// Fourier modes of a periodic function v(t) = sum_n v_n e^{int}.
struct FourierDensity : SparseSeries
{
  using SparseSeries::SparseSeries;
  FourierDensity() = default;
  FourierDensity(SparseSeries s) : SparseSeries(std::move(s)) {}  // NOLINT
};

/// The function v(t) of the vector field v(t) d/dt for a Witt element
/// (e_n contributes i e^{int}).
FourierDensity vector_field_profile(const WittElement& x);

/// A value of the form coeff * pi.
struct PiMultiple
{
  GaussRational coeff;
  friend bool operator==(const PiMultiple& a, const PiMultiple& b) { return a.coeff == b.coeff; }
};

/// Integral over [0, 2pi] of v1' v2'' - v2' v1'' for v1, v2 given as
/// profiles. Only mode pairs (n, -n) survive: -4 pi i sum n^3 a_n b_{-n}.
PiMultiple gf_cocycle_raw(const FourierDensity& v1, const FourierDensity& v2);

/// Integral over [0, 2pi] of v1 v2' - v2 v1' (a coboundary):
/// -4 pi i sum n a_n b_{-n}.
PiMultiple trivial_cocycle(const FourierDensity& v1, const FourierDensity& v2);

/// On the pair (e_j, e_{-j}) both cocycles are multiples of 4 pi i:
/// raw = 4 pi i j^3 and trivial = 4 pi i j. Returns (j^3, j). Their
/// difference 4 pi i (j^3 - j) equals 48 pi i times the modified cocycle.
struct CoboundaryWitness
{
  Rational raw;
  Rational trivial;
};
CoboundaryWitness coboundary_witness(int j);

WittElement to_witt(const RealWittElement& x);
RealWittElement to_real_basis(const WittElement& x);

/// Bracket computed through the complexification.
RealWittElement real_basis_bracket(const RealWittElement& x, const RealWittElement& y);

}  // namespace qrconf
