#include "qrconf/coadjoint.hpp"

#include <algorithm>

namespace qrconf {

template <class S>
PowerSeries<S> PowerSeries<S>::derivative() const
{
  PowerSeries r;
  for (int k = 1; k < size(); ++k) {
    r.c.push_back(from_int<S>(k) * c[static_cast<std::size_t>(k)]);
  }
  return r;
}

template <class S>
PowerSeries<S> PowerSeries<S>::truncated(int n) const
{
  PowerSeries r;
  for (int k = 0; k < std::min(n, size()); ++k) {
    r.c.push_back(c[static_cast<std::size_t>(k)]);
  }
  return r;
}

template <class S>
PowerSeries<S> operator*(const PowerSeries<S>& a, const PowerSeries<S>& b)
{
  const int n = std::min(a.size(), b.size());
  PowerSeries<S> r(std::vector<S>(static_cast<std::size_t>(n), from_int<S>(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; i + j < n; ++j) {
      r.c[static_cast<std::size_t>(i + j)] += a.c[static_cast<std::size_t>(i)] * b.c[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

template <class S>
PowerSeries<S> operator/(const PowerSeries<S>& a, const PowerSeries<S>& b)
{
  const int n = std::min(a.size(), b.size());
  if (n == 0 || is_zero(b.c[0])) {
    throw SingularDerivative("series division by a series vanishing at the expansion point");
  }
  PowerSeries<S> q(std::vector<S>(static_cast<std::size_t>(n), from_int<S>(0)));
  for (int k = 0; k < n; ++k) {
    S acc = a.c[static_cast<std::size_t>(k)];
    for (int j = 1; j <= k; ++j) {
      acc -= b.c[static_cast<std::size_t>(j)] * q.c[static_cast<std::size_t>(k - j)];
    }
    q.c[static_cast<std::size_t>(k)] = acc / b.c[0];
  }
  return q;
}

template <class S>
PowerSeries<S> operator-(const PowerSeries<S>& a, const PowerSeries<S>& b)
{
  const int n = std::min(a.size(), b.size());
  PowerSeries<S> r;
  for (int k = 0; k < n; ++k) {
    r.c.push_back(a.c[static_cast<std::size_t>(k)] - b.c[static_cast<std::size_t>(k)]);
  }
  return r;
}

template <class S>
PowerSeries<S> operator*(const S& k, const PowerSeries<S>& a)
{
  PowerSeries<S> r;
  for (const auto& x : a.c) {
    r.c.push_back(k * x);
  }
  return r;
}

template <class S>
PowerSeries<S> schwarzian(const PowerSeries<S>& g, int order)
{
  if (g.size() < order + 3) {
    throw std::invalid_argument("Schwarzian to order " + std::to_string(order) + " needs " +
                                std::to_string(order + 3) + " coefficients");
  }
  const PowerSeries<S> d1 = g.derivative().truncated(order);
  const PowerSeries<S> d2 = g.derivative().derivative().truncated(order);
  const PowerSeries<S> d3 = g.derivative().derivative().derivative().truncated(order);
  if (is_zero(d1.at(0))) {
    throw SingularDerivative("g' vanishes at the expansion point");
  }
  const PowerSeries<S> ratio = d2 / d1;
  return d3 / d1 - from_ratio<S>(3, 2) * (ratio * ratio);
}

template <class S>
S schwarzian_at(const S& d1, const S& d2, const S& d3)
{
  if (is_zero(d1)) {
    throw SingularDerivative("g' vanishes at the evaluation point");
  }
  const S r = d2 / d1;
  return d3 / d1 - from_ratio<S>(3, 2) * r * r;
}

PowerSeries<Rational> mobius_series(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                    int terms)
{
  if (sgn(d) == 0) {
    throw SingularDerivative("Mobius map has a pole at the expansion point");
  }
  PowerSeries<Rational> num(std::vector<Rational>(static_cast<std::size_t>(terms)));
  PowerSeries<Rational> den(std::vector<Rational>(static_cast<std::size_t>(terms)));
  num.c[0] = b;
  den.c[0] = d;
  if (terms > 1) {
    num.c[1] = a;
    den.c[1] = c;
  }
  return num / den;
}

PowerSeries<Rational> shift_polynomial(const std::vector<Rational>& poly, const Rational& z0, int terms)
{
  // Repeated synthetic division gives the Taylor coefficients at z0.
  std::vector<Rational> p = poly;
  PowerSeries<Rational> out;
  for (int k = 0; k < terms; ++k) {
    if (p.empty()) {
      out.c.emplace_back(0);
      continue;
    }
    std::vector<Rational> q(p.size() - 1);
    Rational acc = p.back();
    for (std::size_t i = p.size() - 1; i-- > 0;) {
      q[i] = acc;
      acc = p[i] + acc * z0;
    }
    out.c.push_back(acc);
    p = std::move(q);
  }
  return out;
}

PowerSeries<Rational> exponential_series(const Rational& lambda, int terms)
{
  PowerSeries<Rational> out;
  Rational term(1);
  for (int k = 0; k < terms; ++k) {
    out.c.push_back(term);
    term = term * lambda / (k + 1);
  }
  return out;
}

FourierDensity coadjoint_inf(const FourierDensity& v, const FourierDensity& p, const GaussRational& b)
{
  FourierDensity r;
  const GaussRational i = GaussRational::i();
  for (const auto& [j, vj] : v.terms()) {
    for (const auto& [l, pl] : p.terms()) {
      // v p' + 2 v' p on the product mode e^{i(j+l)t}
      r.add(j + l, i * GaussRational(l + 2 * j) * vj * pl);
    }
    // -b v''' with v''' = (ij)^3 v = -i j^3 v
    const mpz_class jj(j);
    r.add(j, i * GaussRational(Rational(jj * jj * jj)) * b * vj);
  }
  return r;
}

int gauss_rank(std::vector<std::vector<GaussRational>> rows)
{
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][col].is_zero()) {
      ++pivot;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    const auto& prow = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) {
        continue;
      }
      const GaussRational f = rows[r][col] / prow[col];
      for (std::size_t c = col; c < cols; ++c) {
        rows[r][c] -= f * prow[c];
      }
    }
    ++rank;
  }
  return rank;
}

int stabilizer_dimension(const Rational& a, const Rational& b, int modes)
{
  if (sgn(b) == 0) {
    throw ZeroLevel("coadjoint level b must be nonzero");
  }
  const FourierDensity p{{0, GaussRational(a)}};
  const int dim = 2 * modes + 1;
  // Column j of the map is the image of e^{ijt}; constant p keeps modes in range.
  std::vector<std::vector<GaussRational>> rows(static_cast<std::size_t>(dim),
                                               std::vector<GaussRational>(static_cast<std::size_t>(dim)));
  for (int j = -modes; j <= modes; ++j) {
    const FourierDensity image = coadjoint_inf(FourierDensity{{j, GaussRational(1)}}, p, GaussRational(b));
    for (const auto& [n, c] : image.terms()) {
      rows[static_cast<std::size_t>(n + modes)][static_cast<std::size_t>(j + modes)] = c;
    }
  }
  return dim - gauss_rank(std::move(rows));
}

#define QRCONF_INSTANTIATE(S)                                                          \
  template struct PowerSeries<S>;                                                      \
  template PowerSeries<S> operator*(const PowerSeries<S>&, const PowerSeries<S>&);     \
  template PowerSeries<S> operator/(const PowerSeries<S>&, const PowerSeries<S>&);     \
  template PowerSeries<S> operator-(const PowerSeries<S>&, const PowerSeries<S>&);     \
  template PowerSeries<S> operator*(const S&, const PowerSeries<S>&);                  \
  template PowerSeries<S> schwarzian(const PowerSeries<S>&, int);                      \
  template S schwarzian_at(const S&, const S&, const S&);

QRCONF_INSTANTIATE(Rational)
QRCONF_INSTANTIATE(Real)

#undef QRCONF_INSTANTIATE

}  // namespace qrconf
