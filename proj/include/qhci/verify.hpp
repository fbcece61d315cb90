#pragma once

#include "qhci/tevelev.hpp"

#include <string>
#include <vector>

namespace qhci {

enum class CheckStatus { Pass, Fail, Skip };

std::string_view status_name(CheckStatus status);  // "pass" / "fail" / "skip"

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;

  bool passed() const { return status != CheckStatus::Fail; }
};

struct VerifyReport {
  FanoSpace space;
  std::vector<CheckResult> checks;

  bool passed() const;
  int failures() const;
};

struct VerifyOptions {
  int alpha_k_max = 3;
  int tevelev_g_max = 2;
  int tevelev_n_max = 4;
  int random_triples = 12;
  unsigned seed = 20240601u;
};

// Individual identities. Each takes the data it needs and reports one line.

CheckResult check_space_invariants(const FanoSpace& space);
CheckResult check_givental(GWTable& table);
CheckResult check_closed_form_oracle(const ContextPtr& hstar, GWTable& table);
CheckResult check_alpha_symmetry(const FanoSpace& space, int k_max);
CheckResult check_memo_determinism(GWTable& table);
CheckResult check_denominators(const GWTable& table);
CheckResult check_parallel_fill(const FanoSpace& space, int k_max);
/// Every stored entry of `table` against a fresh evaluation.
CheckResult check_recompute(const GWTable& table);

CheckResult check_star_homogeneity(const ContextPtr& context, const VerifyOptions& options);
CheckResult check_star_commutative(const ContextPtr& context, const VerifyOptions& options);
CheckResult check_star_associative(const ContextPtr& context, const VerifyOptions& options);
CheckResult check_shift_round_trip(const ContextPtr& hstar, const VerifyOptions& options);
CheckResult check_shift_product(const ContextPtr& hstar, const VerifyOptions& options);
/// Both identities for 2 <= j <= r <= r_max.
CheckResult check_binomial_identities(int r_max);

CheckResult check_euler_routes(const ContextPtr& hstar, GWTable& table);
CheckResult check_euler_top(const ContextPtr& hstar);
CheckResult check_h_times_gamma(const ContextPtr& hstar, GWTable& table);
CheckResult check_euler_prime_identity(const ContextPtr& hstar, GWTable& table);
CheckResult check_shifted_euler(const ContextPtr& hstar);
CheckResult check_shifted_euler_scalar(const ContextPtr& hstar);

/// Closed = direct, grading, empty window remainder and integrality of
/// every valid query with g <= g_max, n <= n_max.
std::vector<CheckResult> check_tevelev(const TevelevSolver& solver, const VerifyOptions& options);

/// The whole suite on one space. `table` may carry entries loaded from a
/// cache; they are re-derived from scratch as part of the run.
VerifyReport run_verify(const FanoSpace& space, GWTable& table,
                        const VerifyOptions& options = {});
VerifyReport run_verify(const FanoSpace& space, const VerifyOptions& options = {});

}  // namespace qhci
