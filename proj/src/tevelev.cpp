#include "qhci/tevelev.hpp"

#include "qhci/euler.hpp"

#include <exception>
#include <string>

namespace qhci {

int k_of(const FanoSpace& space, int g, int n) {
  if (g < 0 || n < 1) {
    throw Error(ErrorCode::Unstable, "genus must be >= 0 and the point count >= 1");
  }
  const int numer = space.r * (n + g - 1);
  if (numer % space.fano_index != 0) {
    throw Error(ErrorCode::NonIntegralDegree,
                "k = r(n+g-1)/d = " + std::to_string(numer) + "/" +
                    std::to_string(space.fano_index) + " is not an integer");
  }
  if (2 * g - 2 + n <= 0) {
    throw Error(ErrorCode::Unstable, "stability 2g - 2 + n > 0 fails for g=" +
                                         std::to_string(g) + ", n=" + std::to_string(n));
  }
  return numer / space.fano_index;
}

Rational discrepancy(const FanoSpace& space, const std::vector<Rational>& b) {
  Rational disc = 0;
  for (std::size_t i = 1; i < b.size(); ++i) {
    disc += b[i] * m_power(space, -static_cast<long>(i), 1);
  }
  return disc;
}

namespace {

int window_size(const FanoSpace& space) { return space.r / space.fano_index + 1; }

}  // namespace

TevelevSolver::TevelevSolver(const ContextPtr& hstar_context, GWTable& table)
    : context_(hstar_context),
      point_(point_class(hstar_context, table)),
      euler_(euler_closed(hstar_context)) {
  if (space().borderline) {
    point_ = shift_basis(point_);
    euler_ = shift_basis(euler_);
    context_ = point_.context_ptr();
  }
  const int r = space().r;
  const int step = window_step(*context_);
  for (int i = 0; i < window_size(space()); ++i) P_.push_back(point_.coefficient(r - i * step, i));
}

TevelevBreakdown TevelevSolver::direct(const TevelevQuery& query) const {
  const FanoSpace& s = space();
  TevelevBreakdown out;
  out.query = query;
  out.k = k_of(s, query.g, query.n);
  out.basis = context_->basis();
  out.P = P_;

  const RingElement z = star_mul(star_pow(point_, query.n), star_pow(euler_, query.g));
  out.grading = z.homogeneous_degree().value_or(-1);

  const int r = s.r;
  const int step = window_step(*context_);
  const int width = window_size(s);
  out.b.resize(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i) out.b[i] = z.coefficient(r - i * step, i + out.k);
  for (int idx = 0; idx <= r; ++idx) {
    for (const auto& [p, c] : z.coeff(idx).terms()) {
      const int i = p - out.k;
      if (i >= 0 && i < width && idx == r - i * step) continue;
      out.outside_window.push_back({idx, p, c});
    }
  }
  out.disc = discrepancy(s, out.b);
  out.value_direct = Rational(s.degree) * out.b[0];
  return out;
}

Rational TevelevSolver::closed(const TevelevBreakdown& bd) const {
  const FanoSpace& s = space();
  Rational lead = 0;
  for (std::size_t i = 0; i < P_.size(); ++i) lead += P_[i] * m_power(s, -static_cast<long>(i), 0);

  Rational genus_factor;
  if (!s.borderline) {
    genus_factor = s.fano_index;
  } else {
    genus_factor = Rational(1) - m_power(s, -s.r, 0) * pow(Rational(s.m_factorial), s.r) *
                                     (Rational(s.r + 1) - Rational(s.euler_char));
  }
  const int g = bd.query.g;
  return pow(lead, bd.query.n) * pow(genus_factor, g) * m_power(s, bd.k, 1 - g) - bd.disc;
}

TevelevBreakdown TevelevSolver::solve(const TevelevQuery& query) const {
  TevelevBreakdown out = direct(query);
  out.value_closed = closed(out);
  return out;
}

TevelevBreakdown tevelev_direct(const ContextPtr& context, GWTable& table,
                                const TevelevQuery& query) {
  return TevelevSolver(context, table).direct(query);
}

Rational tevelev_closed(const ContextPtr& context, GWTable& table, const TevelevQuery& query) {
  TevelevSolver solver(context, table);
  return solver.closed(solver.direct(query));
}

std::vector<TevelevQuery> valid_queries(const FanoSpace& space, int g_max, int n_max) {
  std::vector<TevelevQuery> out;
  for (int g = 0; g <= g_max; ++g) {
    for (int n = 1; n <= n_max; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      if ((space.r * (n + g - 1)) % space.fano_index != 0) continue;
      out.push_back({g, n});
    }
  }
  return out;
}

std::vector<TevelevBreakdown> solve_batch_serial(const TevelevSolver& solver,
                                                 const std::vector<TevelevQuery>& queries) {
  std::vector<TevelevBreakdown> out;
  out.reserve(queries.size());
  for (const auto& q : queries) out.push_back(solver.solve(q));
  return out;
}

std::vector<TevelevBreakdown> solve_batch_parallel(const TevelevSolver& solver,
                                                   const std::vector<TevelevQuery>& queries) {
  const int n = static_cast<int>(queries.size());
  std::vector<TevelevBreakdown> out(queries.size());
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < n; ++t) {
    try {
      out[t] = solver.solve(queries[t]);
    } catch (...) {
#pragma omp critical(qhci_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace qhci
