#pragma once

#include <stdexcept>
#include <string>

namespace qrconf {

/// Base for all library errors.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// The hermitean form or an operator denominator vanishes: h = -n/2.
class DegenerateWeight : public Error
{
public:
  using Error::Error;
};

class DimensionMismatch : public Error
{
public:
  using Error::Error;
};

/// A requested degree lies outside the exact interior window of an operator.
class WindowExceeded : public Error
{
public:
  using Error::Error;
};

class UnsupportedKind : public Error
{
public:
  using Error::Error;
};

/// q_R = 1/(2h-1) is undefined at h = 1/2.
class UndefinedQR : public Error
{
public:
  using Error::Error;
};

/// A contraction over the inverse pairing only converges for h > 1/2.
class ConvergenceDomain : public Error
{
public:
  using Error::Error;
};

/// The fundamental form vanishes identically (6h^2 - 6h + 1 = 0).
class ZeroForm : public Error
{
public:
  using Error::Error;
};

class SingularDerivative : public Error
{
public:
  using Error::Error;
};

class ZeroLevel : public Error
{
public:
  using Error::Error;
};

class ConfigError : public Error
{
public:
  using Error::Error;
};

}  // namespace qrconf
