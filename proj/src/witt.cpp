#include "qrconf/witt.hpp"

#include <sstream>

namespace qrconf {

GaussRational& GaussRational::operator+=(const GaussRational& o)
{
  re += o.re;
  im += o.im;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o)
{
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o)
{
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o)
{
  const Rational n = o.re * o.re + o.im * o.im;
  if (sgn(n) == 0) {
    throw std::domain_error("division by zero Gaussian rational");
  }
  Rational r = (re * o.re + im * o.im) / n;
  Rational i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string to_string(const GaussRational& z)
{
  if (sgn(z.im) == 0) {
    return to_string(z.re);
  }
  if (sgn(z.re) == 0) {
    return to_string(z.im) + "i";
  }
  return to_string(z.re) + (sgn(z.im) > 0 ? "+" : "") + to_string(z.im) + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << to_string(z); }

SparseSeries::SparseSeries(std::initializer_list<std::pair<const int, GaussRational>> init)
{
  for (const auto& [n, c] : init) {
    add(n, c);
  }
}

GaussRational SparseSeries::operator[](int n) const
{
  auto it = terms_.find(n);
  return it == terms_.end() ? GaussRational{} : it->second;
}

void SparseSeries::add(int n, const GaussRational& c)
{
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

SparseSeries& SparseSeries::operator+=(const SparseSeries& o)
{
  for (const auto& [n, c] : o.terms_) {
    add(n, c);
  }
  return *this;
}

SparseSeries& SparseSeries::operator-=(const SparseSeries& o)
{
  for (const auto& [n, c] : o.terms_) {
    add(n, -c);
  }
  return *this;
}

SparseSeries operator*(const GaussRational& c, const SparseSeries& a)
{
  SparseSeries r;
  for (const auto& [n, x] : a.terms_) {
    r.add(n, c * x);
  }
  return r;
}

WittElement witt_bracket(const WittElement& x, const WittElement& y)
{
  WittElement r;
  for (const auto& [j, a] : x.terms()) {
    for (const auto& [k, b] : y.terms()) {
      r.add(j + k, GaussRational(j - k) * a * b);
    }
  }
  return r;
}

namespace {

Rational central_weight(int j)
{
  const mpz_class jj(j);
  Rational w(jj * jj * jj - jj, 12);
  w.canonicalize();
  return w;
}

}  // namespace

GaussRational gf_cocycle_modified(const WittElement& x, const WittElement& y)
{
  GaussRational acc;
  for (const auto& [j, a] : x.terms()) {
    const GaussRational b = y[-j];
    if (!b.is_zero()) {
      acc += a * b * GaussRational(central_weight(j));
    }
  }
  return acc;
}

VirasoroElement virasoro_bracket(const VirasoroElement& x, const VirasoroElement& y)
{
  return {witt_bracket(x.witt, y.witt), gf_cocycle_modified(x.witt, y.witt)};
}

FourierDensity vector_field_profile(const WittElement& x)
{
  return FourierDensity(GaussRational::i() * static_cast<const SparseSeries&>(x));
}

PiMultiple gf_cocycle_raw(const FourierDensity& v1, const FourierDensity& v2)
{
  GaussRational acc;
  for (const auto& [n, a] : v1.terms()) {
    const GaussRational b = v2[-n];
    if (!b.is_zero()) {
      const mpz_class nn(n);
      acc += GaussRational(Rational(nn * nn * nn)) * a * b;
    }
  }
  return {GaussRational(0, -4) * acc};
}

PiMultiple trivial_cocycle(const FourierDensity& v1, const FourierDensity& v2)
{
  GaussRational acc;
  for (const auto& [n, a] : v1.terms()) {
    const GaussRational b = v2[-n];
    if (!b.is_zero()) {
      acc += GaussRational(n) * a * b;
    }
  }
  return {GaussRational(0, -4) * acc};
}

CoboundaryWitness coboundary_witness(int j)
{
  const FourierDensity v1 = vector_field_profile(WittElement::basis(j));
  const FourierDensity v2 = vector_field_profile(WittElement::basis(-j));
  const GaussRational unit(0, 4);  // 4 pi i, in units of pi
  const GaussRational raw = gf_cocycle_raw(v1, v2).coeff / unit;
  const GaussRational trivial = trivial_cocycle(v1, v2).coeff / unit;
  return {raw.re, trivial.re};
}

RealWittElement RealWittElement::sine(int n, GaussRational k)
{
  RealWittElement x;
  x.s.add(n, k);
  return x;
}

RealWittElement RealWittElement::cosine(int n, GaussRational k)
{
  RealWittElement x;
  x.c.add(n, k);
  return x;
}

RealWittElement RealWittElement::rotation(GaussRational k)
{
  RealWittElement x;
  x.h = std::move(k);
  return x;
}

std::ostream& operator<<(std::ostream& os, const RealWittElement& x)
{
  bool first = true;
  auto term = [&](const GaussRational& c, const std::string& name) {
    if (c.is_zero()) {
      return;
    }
    os << (first ? "" : " + ") << "(" << c << ")" << name;
    first = false;
  };
  term(x.h, "h");
  for (const auto& [n, c] : x.s.terms()) {
    term(c, "s" + std::to_string(n));
  }
  for (const auto& [n, c] : x.c.terms()) {
    term(c, "c" + std::to_string(n));
  }
  if (first) {
    os << "0";
  }
  return os;
}

WittElement to_witt(const RealWittElement& x)
{
  const GaussRational half(Rational(1, 2));
  const GaussRational minus_i_half(0, Rational(-1, 2));
  WittElement r;
  for (const auto& [n, a] : x.s.terms()) {
    r.add(-n, half * a);
    r.add(n, -half * a);
  }
  for (const auto& [n, a] : x.c.terms()) {
    r.add(n, minus_i_half * a);
    r.add(-n, minus_i_half * a);
  }
  r.add(0, GaussRational(0, -1) * x.h);
  return r;
}

RealWittElement to_real_basis(const WittElement& x)
{
  // e_n = i c_n - s_n, e_{-n} = i c_n + s_n, e_0 = i h.
  RealWittElement r;
  const GaussRational i = GaussRational::i();
  for (const auto& [n, a] : x.terms()) {
    if (n == 0) {
      r.h += i * a;
    } else if (n > 0) {
      r.c.add(n, i * a);
      r.s.add(n, -a);
    } else {
      r.c.add(-n, i * a);
      r.s.add(-n, a);
    }
  }
  return r;
}

RealWittElement real_basis_bracket(const RealWittElement& x, const RealWittElement& y)
{
  return to_real_basis(witt_bracket(to_witt(x), to_witt(y)));
}

}  // namespace qrconf
