#include "qhci/qring.hpp"

#include <functional>
#include <string>

namespace qhci {

std::string_view basis_tag(Basis basis) {
  return basis == Basis::HStar ? "H_star" : "H_shifted";
}

std::vector<Rational> magic_relation_coefficients(const FanoSpace& space) {
  const int r = space.r;
  const int top = (r + 1) / space.fano_index;
  std::vector<Rational> out(static_cast<std::size_t>(top), Rational(0));
  const Rational mm = space.m_to_m();
  if (!space.borderline) {
    out[0] = mm;
    return out;
  }
  const Rational mf(space.m_factorial);
  for (int j = 1; j <= top; ++j) {
    out[j - 1] = Rational(binomial(r, j - 1)) * pow(mf, j - 1) * (mm - mf * (r + 1) / j);
  }
  return out;
}

std::shared_ptr<const RingContext> RingContext::make(FanoSpace space, Basis basis) {
  if (basis == Basis::Shifted && !space.borderline) {
    throw Error(ErrorCode::WrongCase, "the shifted basis exists only when |m| = r + L");
  }
  return std::shared_ptr<const RingContext>(new RingContext(std::move(space), basis));
}

RingContext::RingContext(FanoSpace space, Basis basis)
    : space_(std::move(space)), basis_(basis) {
  const int r = space_.r;
  if (basis_ == Basis::Shifted) {
    reduction_.push_back({r, 1, space_.m_to_m()});
  } else if (!space_.borderline) {
    reduction_.push_back({r + 1 - space_.fano_index, 1, space_.m_to_m()});
  } else {
    const auto c = magic_relation_coefficients(space_);
    for (int j = 1; j <= r + 1; ++j) {
      if (c[j - 1] != 0) reduction_.push_back({r + 1 - j, j, c[j - 1]});
    }
  }
}

RingElement::RingElement(ContextPtr context)
    : context_(std::move(context)), coeffs_(static_cast<std::size_t>(context_->dim()) + 1) {}

RingElement RingElement::term(ContextPtr context, int basis_index, int q_power,
                              const Rational& c) {
  RingElement out(std::move(context));
  out.add_term(basis_index, q_power, c);
  return out;
}

Rational RingElement::coefficient(int basis_index, int q_power) const {
  if (basis_index < 0 || basis_index > context_->dim()) return 0;
  return coeffs_[basis_index].coefficient(q_power);
}

bool RingElement::is_zero() const {
  for (const auto& p : coeffs_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

void RingElement::add_term(int basis_index, int q_power, const Rational& c) {
  if (basis_index < 0 || basis_index > context_->dim() || q_power < 0) {
    throw Error(ErrorCode::OutOfRange, "ring term T^" + std::to_string(basis_index) + " q^" +
                                           std::to_string(q_power) + " out of range");
  }
  coeffs_[basis_index].add_term(q_power, c);
}

std::optional<int> RingElement::homogeneous_degree() const {
  const int d = context_->space().fano_index;
  std::optional<int> deg;
  for (int i = 0; i <= context_->dim(); ++i) {
    for (const auto& [p, c] : coeffs_[i].terms()) {
      const int here = i + d * p;
      if (deg && *deg != here) return std::nullopt;
      deg = here;
    }
  }
  return deg;
}

void RingElement::require_same_context(const RingElement& other) const {
  if (context_ != other.context_ && !(*context_ == *other.context_)) {
    throw Error(ErrorCode::ContextMismatch, "ring elements belong to different contexts");
  }
}

RingElement& RingElement::operator+=(const RingElement& other) {
  require_same_context(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  require_same_context(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator*=(const Rational& scalar) {
  for (auto& p : coeffs_) p *= scalar;
  return *this;
}

RingElement RingElement::times_q(int power) const {
  RingElement out(context_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i].shifted(power);
  return out;
}

bool operator==(const RingElement& a, const RingElement& b) {
  return *a.context_ == *b.context_ && a.coeffs_ == b.coeffs_;
}

RingElement star_mul(const RingElement& a, const RingElement& b) {
  if (!(a.context() == b.context())) {
    throw Error(ErrorCode::ContextMismatch, "star product of elements from different contexts");
  }
  const int r = a.context().dim();
  std::vector<QPolynomial> acc(static_cast<std::size_t>(2 * r) + 1);
  for (int i = 0; i <= r; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; j <= r; ++j) {
      if (b.coeff(j).is_zero()) continue;
      acc[i + j] += a.coeff(i) * b.coeff(j);
    }
  }
  // T^p = T^{p-r-1} T^{r+1}; every rewrite lands strictly below p.
  for (int p = 2 * r; p > r; --p) {
    if (acc[p].is_zero()) continue;
    for (const auto& t : a.context().reduction()) {
      acc[p - r - 1 + t.basis_index] += acc[p].shifted(t.q_power) * t.coeff;
    }
    acc[p] = QPolynomial();
  }
  RingElement out(a.context_ptr());
  for (int i = 0; i <= r; ++i) {
    for (const auto& [q, c] : acc[i].terms()) out.add_term(i, q, c);
  }
  return out;
}

RingElement star_pow(const RingElement& a, int n) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "negative star power");
  RingElement result = RingElement::term(a.context_ptr(), 0);
  RingElement base = a;
  while (n > 0) {
    if (n & 1) result = star_mul(result, base);
    n >>= 1;
    if (n > 0) base = star_mul(base, base);
  }
  return result;
}

namespace {

void require_hstar(const ContextPtr& context) {
  if (context->basis() != Basis::HStar) {
    throw Error(ErrorCode::ContextMismatch, "classical powers are expanded in the H_star basis");
  }
}

}  // namespace

std::vector<RingElement> classical_powers(const ContextPtr& context, GWTable& table) {
  require_hstar(context);
  const FanoSpace& space = context->space();
  const int r = space.r;
  const int d = space.fano_index;
  table.ensure_degree(std::max(1, r / d));

  std::vector<RingElement> powers;
  powers.reserve(static_cast<std::size_t>(r) + 1);
  powers.push_back(RingElement::term(context, 0));
  const RingElement h = RingElement::term(context, 1);
  for (int t = 1; t <= r; ++t) {
    RingElement next = star_mul(h, powers[t - 1]);
    for (int k = 1; k * d <= t; ++k) {
      const Rational c = Rational(k) * alpha(table, k, r - (t - k * d));
      if (c != 0) next -= powers[t - k * d].times_q(k) * c;
    }
    powers.push_back(std::move(next));
  }
  return powers;
}

RingElement classical_to_star(const ContextPtr& context, GWTable& table, int t) {
  if (t < 0 || t > context->dim()) {
    throw Error(ErrorCode::OutOfRange, "classical power " + std::to_string(t) + " out of range");
  }
  auto powers = classical_powers(context, table);
  return powers[t];
}

Rational hstar_coeff_closed_form(GWTable& table, int i, int j) {
  const FanoSpace& space = table.space();
  const int r = space.r;
  const int d = space.fano_index;
  if (i < 0 || i > r || j < 1 || j * d > i) return 0;
  const int u_max = i - j * d;

  Rational total = 0;
  std::vector<int> parts;  // i_1..i_l
  std::vector<int> us;     // u_1 >= ... >= u_l

  // Over weakly decreasing u-tuples for a fixed composition.
  std::function<Rational(int, int, int)> sum_u = [&](int a, int prefix, int bound) -> Rational {
    const int l = static_cast<int>(parts.size());
    if (a == l) return 1;
    const int prefix_here = prefix + parts[a];
    Rational acc = 0;
    for (int u = 0; u <= bound; ++u) {
      const Rational factor =
          Rational(parts[a]) * alpha(table, parts[a], r - (j - prefix_here) * d - u);
      if (factor == 0) continue;
      acc += factor * sum_u(a + 1, prefix_here, u);
    }
    return acc;
  };

  std::function<void(int)> compose = [&](int remaining) {
    if (remaining == 0) {
      const Rational sign = parts.size() % 2 == 0 ? 1 : -1;
      total += sign * sum_u(0, 0, u_max);
      return;
    }
    for (int part = 1; part <= remaining; ++part) {
      parts.push_back(part);
      compose(remaining - part);
      parts.pop_back();
    }
  };
  compose(j);
  return total;
}

std::vector<Rational> hstar_top_coefficients(GWTable& table) {
  const FanoSpace& space = table.space();
  const int r = space.r;
  const int d = space.fano_index;
  const int top = (r + 1) / d;
  table.ensure_degree(top);
  auto context = RingContext::make(space, Basis::HStar);
  const auto powers = classical_powers(context, table);

  // H^{*r} = H^r - sum_j c_j q^j H^{*(r-jd)}, hence
  // H^{*(r+1)} = H * H^r - sum_j c_j q^j H^{*(r+1-jd)}.
  RingElement result(context);
  for (int k = 1; k <= top; ++k) {
    const Rational c = Rational(k) * alpha(table, k, k * d - 1);
    if (c != 0) result += powers[r + 1 - k * d].times_q(k) * c;
  }
  for (int j = 1; j * d <= r; ++j) {
    const Rational c = powers[r].coefficient(r - j * d, j);
    if (c != 0) result.add_term(r - j * d + 1, j, -c);
  }

  std::vector<Rational> out(static_cast<std::size_t>(top));
  for (int j = 1; j <= top; ++j) out[j - 1] = result.coefficient(r + 1 - j * d, j);
  return out;
}

RingElement shift_basis(const RingElement& element) {
  const RingContext& from = element.context();
  const FanoSpace& space = from.space();
  if (!space.borderline) {
    throw Error(ErrorCode::WrongCase, "basis shift requires |m| = r + L");
  }
  const bool to_shifted = from.basis() == Basis::HStar;
  auto target = RingContext::make(space, to_shifted ? Basis::Shifted : Basis::HStar);
  // H = (H + m!q) - m!q going forward, H + m!q = H + m!q going back.
  const Rational step = to_shifted ? Rational(-space.m_factorial) : Rational(space.m_factorial);

  RingElement out(target);
  for (int i = 0; i <= from.dim(); ++i) {
    for (const auto& [p, c] : element.coeff(i).terms()) {
      for (int j = 0; j <= i; ++j) {
        out.add_term(j, p + i - j, c * Rational(binomial(i, j)) * pow(step, i - j));
      }
    }
  }
  return out;
}

RingElement point_class(const ContextPtr& context, GWTable& table) {
  return classical_to_star(context, table, context->dim()) * context->space().inverse_degree();
}

int window_step(const RingContext& context) {
  return context.basis() == Basis::Shifted ? 1 : context.space().fano_index;
}

}  // namespace qhci
