#include "qhci/euler.hpp"

namespace qhci {

RingElement euler_closed(const ContextPtr& context) {
  if (context->basis() != Basis::HStar) {
    throw Error(ErrorCode::ContextMismatch, "euler_closed is stated in the H_star basis");
  }
  const FanoSpace& s = context->space();
  const int r = s.r;
  const Rational inv_deg = s.inverse_degree();
  const Rational chi(s.euler_char);

  RingElement e = RingElement::term(context, r, 0, inv_deg * chi);
  if (!s.borderline) {
    const Rational c = (Rational(s.fano_index) - chi) * m_power(s, 1, -1);
    e.add_term(s.total_degree - s.codim - 1, 1, c);
    return e;
  }
  const Rational mm = s.m_to_m();
  const Rational mf(s.m_factorial);
  for (int j = 1; j <= r; ++j) {
    const Rational c = inv_deg * (Rational(j) - chi) * Rational(binomial(r, j - 1)) *
                       pow(mf, j - 1) * (mm - mf * (r + 1) / j);
    e.add_term(r - j, j, c);
  }
  return e;
}

RingElement gamma_class(const ContextPtr& context, GWTable& table) {
  const FanoSpace& s = context->space();
  const int r = s.r;
  const int d = s.fano_index;
  const Rational inv_deg = s.inverse_degree();
  const Rational a = inv_deg * (Rational(s.euler_char) - (r + 1));
  const auto top = hstar_top_coefficients(table);

  RingElement g = RingElement::term(context, r, 0, a);
  for (int j = 1; j * d <= r; ++j) g.add_term(r - j * d, j, -a * top[j - 1]);
  return g;
}

RingElement euler_prime(const ContextPtr& context, GWTable& table) {
  const int r = context->dim();
  const auto powers = classical_powers(context, table);
  RingElement sum(context);
  for (int i = 0; i <= r; ++i) sum += star_mul(powers[i], powers[r - i]);
  return sum * context->space().inverse_degree();
}

RingElement euler_constructive(const ContextPtr& context, GWTable& table) {
  return gamma_class(context, table) + euler_prime(context, table);
}

RingElement euler_shifted(const ContextPtr& context) {
  return shift_basis(euler_closed(context));
}

std::vector<Rational> euler_shifted_expected(const FanoSpace& s) {
  if (!s.borderline) throw Error(ErrorCode::WrongCase, "shifted Euler class needs |m| = r + L");
  const int r = s.r;
  const Rational inv_deg = s.inverse_degree();
  const Rational chi(s.euler_char);
  const Rational mm = s.m_to_m();
  const Rational mf(s.m_factorial);
  const Rational defect = Rational(r + 1) - chi;

  std::vector<Rational> out(static_cast<std::size_t>(r) + 1);
  out[0] = inv_deg * chi;
  out[1] = inv_deg * defect * (mm - mf) - m_power(s, 1, -1) * r;
  for (int j = 2; j <= r; ++j) out[j] = inv_deg * pow(mf, j - 1) * defect * (mm - mf);
  return out;
}

Rational shifted_euler_scalar(const FanoSpace& s) {
  const Rational mf(s.m_factorial);
  return s.inverse_degree() - m_power(s, -s.r, -1) * pow(mf, s.r) *
                                  (Rational(s.r + 1) - Rational(s.euler_char));
}

}  // namespace qhci
