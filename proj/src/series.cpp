#include "qhci/series.hpp"

#include <string>

namespace qhci {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

TruncatedSeries TruncatedSeries::polynomial(std::vector<Rational> coefficients, int order) {
  coefficients.resize(static_cast<std::size_t>(order) + 1, Rational(0));
  return TruncatedSeries(std::move(coefficients));
}

const Rational& TruncatedSeries::coefficient(int n) const {
  if (n < 0 || n > order()) {
    throw Error(ErrorCode::OutOfRange, "coefficient index " + std::to_string(n) +
                                           " outside [0, " + std::to_string(order()) + "]");
  }
  return coeffs_[static_cast<std::size_t>(n)];
}

TruncatedSeries mul_truncated(const TruncatedSeries& a, const TruncatedSeries& b, int order) {
  if (order < 0 || a.order() < order || b.order() < order) {
    throw Error(ErrorCode::InsufficientOrder, "series product requested to order " +
                                                  std::to_string(order) +
                                                  " from inputs of lower order");
  }
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    Rational acc = 0;
    for (int i = 0; i <= n; ++i) {
      if (x[i] == 0) continue;
      acc += x[i] * y[n - i];
    }
    out[n] = acc;
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries invert_truncated(const TruncatedSeries& a, int order) {
  if (order < 0 || a.order() < order) {
    throw Error(ErrorCode::InsufficientOrder,
                "series inverse requested to order " + std::to_string(order));
  }
  const auto& c = a.coefficients();
  if (c[0] == 0) throw Error(ErrorCode::ZeroConstantTerm, "series has zero constant term");

  const Rational inv0 = 1 / c[0];
  std::vector<Rational> b(static_cast<std::size_t>(order) + 1);
  b[0] = inv0;
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int i = 1; i <= n; ++i) acc += c[i] * b[n - i];
    b[n] = -acc * inv0;
  }
  return TruncatedSeries(std::move(b));
}

QPolynomial QPolynomial::monomial(int power, const Rational& c) {
  QPolynomial p;
  p.add_term(power, c);
  return p;
}

Rational QPolynomial::coefficient(int power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QPolynomial::add_term(int power, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

QPolynomial& QPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scalar;
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial out;
  for (const auto& [p, x] : a.terms_) {
    for (const auto& [s, y] : b.terms_) out.add_term(p + s, x * y);
  }
  return out;
}

QPolynomial QPolynomial::shifted(int shift) const {
  QPolynomial out;
  for (const auto& [p, c] : terms_) out.terms_.emplace(p + shift, c);
  return out;
}

}  // namespace qhci
