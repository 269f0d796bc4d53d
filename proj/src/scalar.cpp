#include "qrconf/scalar.hpp"

#include <cmath>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace qrconf {

std::string to_string(const Rational& x)
{
  if (x.get_den() == 1) {
    return x.get_num().get_str();
  }
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const Real& x)
{
  if (boost::multiprecision::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  if (boost::multiprecision::isnan(x)) {
    return "nan";
  }
  return x.str(30, std::ios_base::fmtflags(0));
}

std::string to_decimal(const Real& x)
{
  if (boost::multiprecision::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  if (boost::multiprecision::isnan(x)) {
    return "nan";
  }
  // Shortest decimal that round-trips through a double.
  const double d = x.convert_to<double>();
  for (int digits = 1; digits <= 17; ++digits) {
    std::ostringstream os;
    os.precision(digits);
    os << d;
    if (std::stod(os.str()) == d) {
      return os.str();
    }
  }
  std::ostringstream os;
  os.precision(17);
  os << d;
  return os.str();
}

std::string to_decimal(const Rational& x) { return to_decimal(to_real(x)); }

Rational parse_rational(const std::string& text)
{
  static const std::regex fraction(R"(^\s*([+-]?\d+)\s*/\s*(\d+)\s*$)");
  static const std::regex decimal(R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, fraction)) {
    std::string p = m[1].str();
    if (p[0] == '+') {
      p.erase(0, 1);
    }
    // Base 10 explicitly: base 0 would read a leading zero as octal.
    mpz_class num(p, 10);
    mpz_class den(m[2].str(), 10);
    if (den == 0) {
      throw std::invalid_argument("zero denominator in '" + text + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (std::regex_match(text, m, decimal) && (m[2].length() + m[3].length()) > 0) {
    const std::string digits = m[2].str() + m[3].str();
    long exponent = -static_cast<long>(m[3].length());
    if (m[4].matched) {
      exponent += std::stol(m[4].str());
    }
    mpz_class num(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    Rational r = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
    r.canonicalize();
    if (m[1].str() == "-") {
      r = -r;
    }
    return r;
  }
  throw std::invalid_argument("not a rational number: '" + text + "'");
}

Real parse_real(const std::string& text)
{
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    return to_real(parse_rational(text));
  }
  // Validates syntax; the Real constructor would silently accept junk.
  (void)parse_rational(text);
  return Real(text);
}

}  // namespace qrconf
