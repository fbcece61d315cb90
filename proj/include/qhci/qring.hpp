#pragma once

#include "qhci/gw.hpp"
#include "qhci/rational.hpp"
#include "qhci/series.hpp"
#include "qhci/space.hpp"

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

namespace qhci {

/// Which generator T the ring coordinates use: T = H (basis H^{*i}) or,
/// for index-one spaces only, T = H + m! q.
enum class Basis { HStar, Shifted };

std::string_view basis_tag(Basis basis);  // "H_star" / "H_shifted"

/// One term c q^p T^i on the right-hand side of T^{r+1} = ...
struct ReductionTerm {
  int basis_index;
  int q_power;
  Rational coeff;
};

/// Restricted quantum ring Q[q][T]/(T^{r+1} - reduction) of a fixed space.
class RingContext {
public:
  /// Shifted is only allowed on borderline spaces (WrongCase otherwise).
  static std::shared_ptr<const RingContext> make(FanoSpace space, Basis basis);

  const FanoSpace& space() const { return space_; }
  Basis basis() const { return basis_; }
  int dim() const { return space_.r; }
  const std::vector<ReductionTerm>& reduction() const { return reduction_; }

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.basis_ == b.basis_ && a.space_ == b.space_;
  }

private:
  RingContext(FanoSpace space, Basis basis);

  FanoSpace space_;
  Basis basis_;
  std::vector<ReductionTerm> reduction_;
};

using ContextPtr = std::shared_ptr<const RingContext>;

/// sum_i p_i(q) T^i for i = 0..r.
class RingElement {
public:
  explicit RingElement(ContextPtr context);
  /// c q^p T^i.
  static RingElement term(ContextPtr context, int basis_index, int q_power = 0,
                          const Rational& c = 1);

  const RingContext& context() const { return *context_; }
  const ContextPtr& context_ptr() const { return context_; }
  const std::vector<QPolynomial>& coeffs() const { return coeffs_; }
  const QPolynomial& coeff(int basis_index) const { return coeffs_.at(basis_index); }
  Rational coefficient(int basis_index, int q_power) const;
  bool is_zero() const;

  void add_term(int basis_index, int q_power, const Rational& c);

  /// Common value of basis_index + d * q_power over all terms; nullopt for
  /// zero or inhomogeneous elements.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(const Rational& scalar);
  /// Multiply by q^power.
  RingElement times_q(int power) const;

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const Rational& s) { return a *= s; }
  friend RingElement operator*(const Rational& s, RingElement a) { return a *= s; }

  friend bool operator==(const RingElement& a, const RingElement& b);

private:
  void require_same_context(const RingElement& other) const;

  ContextPtr context_;
  std::vector<QPolynomial> coeffs_;
};

/// Quantum product: convolve in T, then rewrite T^p (p > r) top-down with
/// the context's reduction rule.
RingElement star_mul(const RingElement& a, const RingElement& b);

/// a^{*n} by repeated squaring; n = 0 gives the unit.
RingElement star_pow(const RingElement& a, int n);

/// Coefficients C_j of q^j H^{*(r+1-jd)} in H^{*(r+1)} predicted by
/// Givental's relations, j = 1..floor((r+1)/d) at index j-1. For
/// index-one spaces this is the expansion of (H + m!q)^{*(r+1)} =
/// m^m q (H + m!q)^{*r} in powers of H.
std::vector<Rational> magic_relation_coefficients(const FanoSpace& space);

/// Classical powers H^0..H^r written in the H^{*i} basis. Built upward:
/// H^t = H * H^{t-1} - sum_k k alpha^k_{r-(t-kd)} q^k H^{t-kd}.
std::vector<RingElement> classical_powers(const ContextPtr& context, GWTable& table);

/// Single classical power; OutOfRange unless 0 <= t <= r.
RingElement classical_to_star(const ContextPtr& context, GWTable& table, int t);

/// Coeff(H^i, q^j H^{*(i-jd)}) from the nested composition sum over
/// alpha values (no ring arithmetic). Zero outside 0 <= i <= r,
/// 1 <= j <= floor(i/d).
Rational hstar_coeff_closed_form(GWTable& table, int i, int j);

/// Coeff(H^{*(r+1)}, q^j H^{*(r+1-jd)}) for j = 1..floor((r+1)/d) (index
/// j-1), computed as H * H^{*r} using only two-point invariants: the
/// divisor equation gives H * H^r = sum_k k alpha^k_{kd-1} q^k H^{r+1-kd}.
/// Independent of the reduction rule, so comparing it with
/// magic_relation_coefficients tests the invariants.
std::vector<Rational> hstar_top_coefficients(GWTable& table);

/// Triangular change between H^{*i} and (H + m!q)^{*i}; the result lives
/// in the other basis. WrongCase on strict Fano spaces.
RingElement shift_basis(const RingElement& element);

/// P = m^{-1} H^r in the H^{*i} basis.
RingElement point_class(const ContextPtr& context, GWTable& table);

/// Basis-index drop per power of q in a degree-2r element: d for H_star,
/// 1 for H_shifted. Coefficients are read at q^j T^{r - j * step}.
int window_step(const RingContext& context);

}  // namespace qhci
