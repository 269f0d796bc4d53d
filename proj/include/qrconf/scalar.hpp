#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qrconf {

/// Exact rational scalar.
using Rational = mpq_class;

/// 50-digit binary floating point. Used for irrational weights and for the
/// large contraction sums where exact denominators blow up.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<50, boost::multiprecision::allocate_stack>,
    boost::multiprecision::et_off>;

inline Real to_real(const Real& x) { return x; }

inline Real to_real(const Rational& x)
{
  Real r;
  mpfr_set_q(r.backend().data(), x.get_mpq_t(), MPFR_RNDN);
  return r;
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Real& x) { return x == 0; }

inline int sign_of(const Rational& x) { return sgn(x); }
inline int sign_of(const Real& x) { return x.sign(); }

inline Rational abs_of(const Rational& x) { return abs(x); }
inline Real abs_of(const Real& x) { return boost::multiprecision::abs(x); }

/// Values below this magnitude count as zero in float mode when a check
/// would otherwise divide by a vanishing quantity.
inline const Real& real_zero_threshold()
{
  static const Real t("1e-40");
  return t;
}

inline bool is_negligible(const Rational& x) { return is_zero(x); }
inline bool is_negligible(const Real& x) { return abs_of(x) < real_zero_threshold(); }

template <class S>
S from_int(std::int64_t v)
{
  if constexpr (std::is_same_v<S, Rational>) {
    return Rational(mpz_class(std::to_string(v)));
  } else {
    return S(v);
  }
}

template <class S>
S from_ratio(std::int64_t p, std::int64_t q)
{
  if constexpr (std::is_same_v<S, Rational>) {
    Rational r(mpz_class(std::to_string(p)), mpz_class(std::to_string(q)));
    r.canonicalize();
    return r;
  } else {
    return S(p) / S(q);
  }
}

/// True when x is an integer (exactly, in either mode).
inline bool is_integer(const Rational& x) { return x.get_den() == 1; }
inline bool is_integer(const Real& x) { return boost::multiprecision::floor(x) == x; }

/// "p/q" (or "p") for rationals; shortest-ish decimal for reals.
std::string to_string(const Rational& x);
std::string to_string(const Real& x);

/// Decimal rendering with 17 significant digits, suitable for JSON/CSV.
std::string to_decimal(const Rational& x);
std::string to_decimal(const Real& x);

/// Parses "p/q", "p", or a finite decimal such as "2.5" or "-1e-3" exactly.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// Parses a decimal string into a Real at full working precision.
Real parse_real(const std::string& text);

}  // namespace qrconf
