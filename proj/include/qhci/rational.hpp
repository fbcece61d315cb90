#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qhci {

using Integer = mpz_class;
using Rational = mpq_class;

enum class ErrorCode {
  InvalidDimension,
  InvalidDegree,
  EmptyDegrees,
  NonFano,
  Unstable,
  NonIntegralDegree,
  InconsistentKey,
  DegreeBoundExceeded,
  OutOfRange,
  ContextMismatch,
  WrongCase,
  InsufficientOrder,
  ZeroConstantTerm,
  MalformedRational,
  CacheMismatch,
  Io,
  Usage,
};

/// Stable snake_case identifier used in machine-readable error objects.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Canonical "p/q" form; the denominator is omitted when it is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Strict inverse of to_string: accepts `-?digits(/digits)?` with a
/// nonzero denominator and canonicalizes. Anything else throws
/// ErrorCode::MalformedRational.
Rational parse_rational(std::string_view text);

/// base^exponent for any integer exponent; base must be nonzero when
/// exponent < 0.
Rational pow(const Rational& base, long exponent);

Integer binomial(long n, long k);
Integer factorial(long n);

}  // namespace qhci
