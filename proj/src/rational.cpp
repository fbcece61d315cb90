#include "qhci/rational.hpp"

#include <cctype>

namespace qhci {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidDimension: return "invalid_dimension";
    case ErrorCode::InvalidDegree: return "invalid_degree";
    case ErrorCode::EmptyDegrees: return "empty_degrees";
    case ErrorCode::NonFano: return "non_fano";
    case ErrorCode::Unstable: return "unstable";
    case ErrorCode::NonIntegralDegree: return "non_integral_k";
    case ErrorCode::InconsistentKey: return "inconsistent_key";
    case ErrorCode::DegreeBoundExceeded: return "k_max_exceeded";
    case ErrorCode::OutOfRange: return "out_of_range";
    case ErrorCode::ContextMismatch: return "context_mismatch";
    case ErrorCode::WrongCase: return "wrong_case";
    case ErrorCode::InsufficientOrder: return "insufficient_order";
    case ErrorCode::ZeroConstantTerm: return "zero_constant_term";
    case ErrorCode::MalformedRational: return "malformed_rational";
    case ErrorCode::CacheMismatch: return "cache_mismatch";
    case ErrorCode::Io: return "io";
    case ErrorCode::Usage: return "usage";
  }
  return "unknown";
}

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorCode::MalformedRational,
                 "malformed rational string '" + std::string(text) + "'");
  };
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw fail();

  Integer d(std::string(den), 10);
  if (d == 0) throw fail();
  Rational out(Integer(std::string(num), 10), d);
  out.canonicalize();
  if (text.front() == '-') out = -out;
  return out;
}

Rational pow(const Rational& base, long exponent) {
  Rational b = base;
  if (exponent < 0) {
    if (b == 0) throw Error(ErrorCode::OutOfRange, "zero to a negative power");
    b = 1 / b;
    exponent = -exponent;
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer factorial(long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace qhci
