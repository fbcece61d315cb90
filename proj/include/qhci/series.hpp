#pragma once

#include "qhci/rational.hpp"

#include <map>
#include <vector>

namespace qhci {

/// Dense power series in one variable known exactly through x^order.
class TruncatedSeries {
public:
  /// Coefficients c_0..c_N; order is N.
  explicit TruncatedSeries(std::vector<Rational> coefficients);

  /// A polynomial viewed as a series to the given order: missing
  /// coefficients are genuinely zero, higher ones are dropped.
  static TruncatedSeries polynomial(std::vector<Rational> coefficients, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Throws OutOfRange when n is outside [0, order].
  const Rational& coefficient(int n) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
  std::vector<Rational> coeffs_;
};

/// Cauchy product truncated at `order`. Both inputs must be known to at
/// least that order (InsufficientOrder otherwise).
TruncatedSeries mul_truncated(const TruncatedSeries& a, const TruncatedSeries& b, int order);

/// b with a*b = 1 mod x^(order+1). Needs c_0 != 0 and a known to `order`.
TruncatedSeries invert_truncated(const TruncatedSeries& a, int order);

inline const Rational& coefficient(const TruncatedSeries& a, int n) { return a.coefficient(n); }

/// Sparse polynomial in q with nonnegative exponents and no stored zeros.
class QPolynomial {
public:
  using Terms = std::map<int, Rational>;

  QPolynomial() = default;
  static QPolynomial monomial(int power, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of q^power (zero if absent).
  Rational coefficient(int power) const;

  void add_term(int power, const Rational& c);

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  QPolynomial& operator*=(const Rational& scalar);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const Rational& s) { return a *= s; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  /// Multiply by q^shift.
  QPolynomial shifted(int shift) const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

private:
  Terms terms_;
};

}  // namespace qhci
