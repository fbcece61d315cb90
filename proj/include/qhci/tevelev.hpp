#pragma once

#include "qhci/qring.hpp"

#include <vector>

namespace qhci {

/// Genus g, n marked points; the curve degree k is implied.
struct TevelevQuery {
  int g = 0;
  int n = 0;

  friend bool operator==(const TevelevQuery&, const TevelevQuery&) = default;
};

/// k = r(n + g - 1)/d. Throws NonIntegralDegree when d does not divide
/// r(n + g - 1), then Unstable when 2g - 2 + n <= 0.
int k_of(const FanoSpace& space, int g, int n);

struct WindowTerm {
  int basis_index;
  int q_power;
  Rational value;
};

struct TevelevBreakdown {
  TevelevQuery query;
  int k = 0;
  Basis basis = Basis::HStar;
  std::vector<Rational> P;  // P_0..P_{floor(r/d)}
  std::vector<Rational> b;  // b_0..b_{floor(r/d)}
  Rational disc;
  Rational value_direct;
  Rational value_closed;
  /// Terms of P^{*n} * E^{*g} outside the b_i window (expected empty).
  std::vector<WindowTerm> outside_window;
  /// basis_index + d * q_power of P^{*n} * E^{*g}, or -1 if it is zero.
  int grading = -1;

  bool routes_agree() const { return value_direct == value_closed; }
};

/// Disc = sum_{i >= 1} b_i m^{-i m + 1}.
Rational discrepancy(const FanoSpace& space, const std::vector<Rational>& b);

/// Holds P and E in the working basis (H_star, or H_shifted when |m| = r + L)
/// so that many queries can share them. solve() only reads members and is
/// safe to call from several threads at once.
class TevelevSolver {
public:
  TevelevSolver(const ContextPtr& hstar_context, GWTable& table);

  const FanoSpace& space() const { return context_->space(); }
  const ContextPtr& context() const { return context_; }
  const RingElement& point() const { return point_; }
  const RingElement& euler() const { return euler_; }
  const std::vector<Rational>& point_coefficients() const { return P_; }

  /// Ring route: Z = P^{*n} * E^{*g}, b_i read off Z, value = m^1 b_0.
  TevelevBreakdown direct(const TevelevQuery& query) const;
  /// Closed formula evaluated from P_i and the discrepancy of `direct`.
  Rational closed(const TevelevBreakdown& breakdown) const;
  /// direct() with value_closed filled in.
  TevelevBreakdown solve(const TevelevQuery& query) const;

private:
  ContextPtr context_;
  RingElement point_;
  RingElement euler_;
  std::vector<Rational> P_;
};

TevelevBreakdown tevelev_direct(const ContextPtr& context, GWTable& table,
                                const TevelevQuery& query);
Rational tevelev_closed(const ContextPtr& context, GWTable& table, const TevelevQuery& query);

/// Every query with 0 <= g <= g_max, 1 <= n <= n_max that defines a
/// Tevelev degree on this space.
std::vector<TevelevQuery> valid_queries(const FanoSpace& space, int g_max, int n_max);

std::vector<TevelevBreakdown> solve_batch_serial(const TevelevSolver& solver,
                                                 const std::vector<TevelevQuery>& queries);
/// OpenMP over queries; results in input order, identical to the serial batch.
std::vector<TevelevBreakdown> solve_batch_parallel(const TevelevSolver& solver,
                                                   const std::vector<TevelevQuery>& queries);

}  // namespace qhci
