#include "qhci/verify.hpp"

#include "qhci/euler.hpp"

#include <random>
#include <sstream>

namespace qhci {

std::string_view status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "fail";
}

bool VerifyReport::passed() const { return failures() == 0; }

int VerifyReport::failures() const {
  int n = 0;
  for (const auto& c : checks) n += c.passed() ? 0 : 1;
  return n;
}

namespace {

CheckResult make(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

CheckResult skip(std::string name, std::string why) {
  return {std::move(name), CheckStatus::Skip, std::move(why)};
}

// True when every prime factor of den divides base.
bool divides_power_of(Integer den, const Integer& base) {
  if (den < 0) den = -den;
  Integer g;
  while (den != 1) {
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), base.get_mpz_t());
    if (g == 1) return false;
    den /= g;
  }
  return true;
}

std::string describe(const RingElement& e, std::size_t limit = 6) {
  std::ostringstream os;
  std::size_t shown = 0;
  for (int i = 0; i <= e.context().dim(); ++i) {
    for (const auto& [p, c] : e.coeff(i).terms()) {
      if (shown++ == limit) {
        os << " ...";
        return os.str();
      }
      os << (shown > 1 ? " " : "") << "(" << i << "," << p << "," << to_string(c) << ")";
    }
  }
  return shown == 0 ? "0" : os.str();
}

// Random homogeneous element of the given grading with small rational
// coefficients.
RingElement random_homogeneous(const ContextPtr& ctx, int grading, std::mt19937& rng) {
  const int r = ctx->dim();
  const int d = ctx->space().fano_index;
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  RingElement e(ctx);
  for (int i = 0; i <= r; ++i) {
    const int rest = grading - i;
    if (rest < 0 || rest % d != 0) continue;
    Rational c(num(rng), den(rng));
    c.canonicalize();
    e.add_term(i, rest / d, c);
  }
  if (e.is_zero()) e.add_term(grading % d, grading / d, 1);
  return e;
}

int random_grading(const ContextPtr& ctx, std::mt19937& rng) {
  std::uniform_int_distribution<int> g(0, 2 * ctx->dim() + 2 * ctx->space().fano_index);
  return g(rng);
}

}  // namespace

CheckResult check_space_invariants(const FanoSpace& s) {
  const std::string name = "space.invariants";
  if (s.prim_rank < 0) return make(name, false, "prim_rank = " + to_string(s.prim_rank));
  if (s.fano_index < 1) return make(name, false, "d < 1");
  const bool expect_border = s.total_degree == s.r + s.codim;
  if (s.borderline != expect_border || (s.borderline && s.fano_index != 1)) {
    return make(name, false, "borderline flag inconsistent with d");
  }
  std::vector<int> reversed(s.degrees.values().rbegin(), s.degrees.values().rend());
  if (euler_characteristic(s.r, DegreeVector(reversed)) != s.euler_char) {
    return make(name, false, "chi depends on degree order");
  }
  return make(name, true, "chi=" + to_string(s.euler_char) + " d=" + std::to_string(s.fano_index) +
                              " prim_rank=" + to_string(s.prim_rank));
}

CheckResult check_givental(GWTable& table) {
  const auto got = hstar_top_coefficients(table);
  const auto want = magic_relation_coefficients(table.space());
  std::ostringstream os;
  bool ok = got.size() == want.size();
  for (std::size_t j = 0; ok && j < got.size(); ++j) {
    if (got[j] != want[j]) {
      ok = false;
      os << "j=" << j + 1 << ": got " << to_string(got[j]) << ", want " << to_string(want[j]);
    }
  }
  if (ok) {
    os << "C = [";
    for (std::size_t j = 0; j < got.size(); ++j) os << (j ? ", " : "") << to_string(got[j]);
    os << "]";
  }
  return make("gw.givental_consistency", ok, os.str());
}

CheckResult check_closed_form_oracle(const ContextPtr& hstar, GWTable& table) {
  const int r = hstar->dim();
  const int d = hstar->space().fano_index;
  const auto powers = classical_powers(hstar, table);
  int compared = 0;
  for (int i = 0; i <= r; ++i) {
    for (int j = 1; j * d <= i; ++j) {
      const Rational a = hstar_coeff_closed_form(table, i, j);
      const Rational b = powers[i].coefficient(i - j * d, j);
      if (a != b) {
        return make("qring.closed_form_oracle", false,
                    "i=" + std::to_string(i) + " j=" + std::to_string(j) + ": closed form " +
                        to_string(a) + ", ring " + to_string(b));
      }
      ++compared;
    }
  }
  return make("qring.closed_form_oracle", true, std::to_string(compared) + " coefficients");
}

CheckResult check_alpha_symmetry(const FanoSpace& s, int k_max) {
  const int r = s.r;
  const int d = s.fano_index;
  GWTable left(s, k_max);
  GWTable right(s, k_max);
  int compared = 0;
  for (int k = 1; k <= k_max; ++k) {
    for (int j = 0; j <= r; ++j) {
      const int other = k * d + j - 1;
      if (other < 0 || other > r) continue;
      const Rational a = alpha(left, k, r - j);
      const Rational b = alpha(right, k, other);
      if (a != b) {
        return make("gw.alpha_symmetry", false,
                    "k=" + std::to_string(k) + " j=" + std::to_string(j) + ": " + to_string(a) +
                        " vs " + to_string(b));
      }
      ++compared;
    }
  }
  return make("gw.alpha_symmetry", true,
              std::to_string(compared) + " pairs, k <= " + std::to_string(k_max));
}

CheckResult check_memo_determinism(GWTable& table) {
  const GWTable::Memo before = table.memo();
  GWTable fresh(table.space(), table.k_max());
  for (const auto& [key, v] : before) {
    if (fresh.value(key.k, key.a, key.i) != v) {
      return make("gw.memo_determinism", false,
                  "key " + std::to_string(key.k) + "," + std::to_string(key.a) + "," +
                      std::to_string(key.i) + " changed");
    }
  }
  fresh.clear();
  for (const auto& [key, v] : before) {
    if (fresh.value(key.k, key.a, key.i) != v) {
      return make("gw.memo_determinism", false, "value changed after clear()");
    }
  }
  return make("gw.memo_determinism", true, std::to_string(before.size()) + " entries");
}

CheckResult check_denominators(const GWTable& table) {
  for (const auto& [key, v] : table.memo()) {
    if (key.a != 0) continue;  // psi powers bring factorials into the denominators
    if (!divides_power_of(v.get_den(), table.space().degree)) {
      return make("gw.denominators", false,
                  "denominator " + to_string(Integer(v.get_den())) + " at k=" +
                      std::to_string(key.k));
    }
  }
  return make("gw.denominators", true, "primary invariants: all divide a power of deg X");
}

CheckResult check_parallel_fill(const FanoSpace& s, int k_max) {
  GWTable serial(s, k_max);
  GWTable parallel(s, k_max);
  fill_levels_serial(serial, k_max);
  fill_levels_parallel(parallel, k_max);
  const bool ok = serial.memo() == parallel.memo();
  return make("gw.parallel_fill", ok,
              std::to_string(serial.memo().size()) + " entries, k <= " + std::to_string(k_max));
}

CheckResult check_recompute(const GWTable& table) {
  GWTable fresh(table.space(), table.k_max());
  for (const auto& [key, v] : table.memo()) {
    if (fresh.value(key.k, key.a, key.i) != v) {
      return make("gw.recompute", false,
                  "stored " + to_string(v) + " differs at " + std::to_string(key.k) + "," +
                      std::to_string(key.a) + "," + std::to_string(key.i));
    }
  }
  return make("gw.recompute", true, std::to_string(table.memo().size()) + " entries");
}

CheckResult check_star_homogeneity(const ContextPtr& ctx, const VerifyOptions& opt) {
  std::mt19937 rng(opt.seed);
  for (int t = 0; t < opt.random_triples; ++t) {
    const int ga = random_grading(ctx, rng);
    const int gb = random_grading(ctx, rng);
    const RingElement p = star_mul(random_homogeneous(ctx, ga, rng), random_homogeneous(ctx, gb, rng));
    if (!p.is_zero() && p.homogeneous_degree() != ga + gb) {
      return make("qring.homogeneity", false,
                  std::string(basis_tag(ctx->basis())) + " product of gradings " +
                      std::to_string(ga) + "+" + std::to_string(gb) + " is " + describe(p));
    }
  }
  return make("qring.homogeneity", true, std::string(basis_tag(ctx->basis())));
}

CheckResult check_star_commutative(const ContextPtr& ctx, const VerifyOptions& opt) {
  std::mt19937 rng(opt.seed + 1);
  for (int t = 0; t < opt.random_triples; ++t) {
    const RingElement a = random_homogeneous(ctx, random_grading(ctx, rng), rng);
    const RingElement b = random_homogeneous(ctx, random_grading(ctx, rng), rng);
    if (star_mul(a, b) != star_mul(b, a)) {
      return make("qring.commutative", false, "a*b != b*a for a = " + describe(a));
    }
  }
  return make("qring.commutative", true, std::string(basis_tag(ctx->basis())));
}

CheckResult check_star_associative(const ContextPtr& ctx, const VerifyOptions& opt) {
  std::mt19937 rng(opt.seed + 2);
  for (int t = 0; t < opt.random_triples; ++t) {
    const RingElement a = random_homogeneous(ctx, random_grading(ctx, rng), rng);
    const RingElement b = random_homogeneous(ctx, random_grading(ctx, rng), rng);
    const RingElement c = random_homogeneous(ctx, random_grading(ctx, rng), rng);
    if (star_mul(star_mul(a, b), c) != star_mul(a, star_mul(b, c))) {
      return make("qring.associative", false, "(a*b)*c != a*(b*c) for a = " + describe(a));
    }
  }
  return make("qring.associative", true, std::string(basis_tag(ctx->basis())));
}

CheckResult check_shift_round_trip(const ContextPtr& hstar, const VerifyOptions& opt) {
  if (!hstar->space().borderline) return skip("qring.shift_round_trip", "needs |m| = r + L");
  std::mt19937 rng(opt.seed + 3);
  for (int t = 0; t < opt.random_triples; ++t) {
    const RingElement a = random_homogeneous(hstar, random_grading(hstar, rng), rng);
    const RingElement there = shift_basis(a);
    if (there.context().basis() != Basis::Shifted || shift_basis(there) != a) {
      return make("qring.shift_round_trip", false, "round trip differs for " + describe(a));
    }
  }
  return make("qring.shift_round_trip", true);
}

CheckResult check_shift_product(const ContextPtr& hstar, const VerifyOptions& opt) {
  if (!hstar->space().borderline) return skip("qring.shift_product", "needs |m| = r + L");
  std::mt19937 rng(opt.seed + 4);
  for (int t = 0; t < opt.random_triples; ++t) {
    const RingElement a = random_homogeneous(hstar, random_grading(hstar, rng), rng);
    const RingElement b = random_homogeneous(hstar, random_grading(hstar, rng), rng);
    if (shift_basis(star_mul(a, b)) != star_mul(shift_basis(a), shift_basis(b))) {
      return make("qring.shift_product", false, "shift(a*b) differs for a = " + describe(a));
    }
  }
  return make("qring.shift_product", true);
}

CheckResult check_binomial_identities(int r_max) {
  int count = 0;
  for (int r = 2; r <= r_max; ++r) {
    for (int j = 2; j <= r; ++j) {
      Integer plain = 0;
      Integer weighted = 0;
      for (int i = 1; i <= j; ++i) {
        Integer t = binomial(r, i - 1) * binomial(r - i, j - i);
        if ((j - i) % 2 != 0) t = -t;
        plain += t;
        weighted += i * t;
      }
      if (plain != 1 || weighted != r + 1) {
        return make("qring.binomial_identities", false,
                    "r=" + std::to_string(r) + " j=" + std::to_string(j) + ": " +
                        to_string(plain) + ", " + to_string(weighted));
      }
      ++count;
    }
  }
  return make("qring.binomial_identities", true,
              std::to_string(count) + " (r, j) pairs up to r = " + std::to_string(r_max));
}

CheckResult check_euler_routes(const ContextPtr& hstar, GWTable& table) {
  const RingElement closed = euler_closed(hstar);
  const RingElement built = euler_constructive(hstar, table);
  if (closed != built) {
    return make("euler.routes_agree", false,
                "closed " + describe(closed) + " vs constructive " + describe(built));
  }
  return make("euler.routes_agree", true, "E = " + describe(closed));
}

CheckResult check_euler_top(const ContextPtr& hstar) {
  const FanoSpace& s = hstar->space();
  const Rational got = euler_closed(hstar).coefficient(s.r, 0);
  const Rational want = s.inverse_degree() * Rational(s.euler_char);
  return make("euler.top_coefficient", got == want, "Coeff(E, e_r) = " + to_string(got));
}

CheckResult check_h_times_gamma(const ContextPtr& hstar, GWTable& table) {
  const FanoSpace& s = hstar->space();
  const RingElement product = star_mul(RingElement::term(hstar, 1), gamma_class(hstar, table));
  // The coefficients with j <= floor(r/d) are those the derivation of the
  // Euler class consumes; report them separately.
  bool low_zero = true;
  for (int j = 1; j * s.fano_index <= s.r; ++j) {
    if (product.coefficient(s.r + 1 - j * s.fano_index, j) != 0) low_zero = false;
  }
  std::string detail = "H*Gamma = " + describe(product);
  detail += low_zero ? "; terms with j <= r/d vanish" : "; terms with j <= r/d do not vanish";
  return make("euler.h_times_gamma", product.is_zero(), detail);
}

CheckResult check_euler_prime_identity(const ContextPtr& hstar, GWTable& table) {
  const FanoSpace& s = hstar->space();
  const int r = s.r;
  const int d = s.fano_index;
  const auto powers = classical_powers(hstar, table);
  const auto top = hstar_top_coefficients(table);
  RingElement sum(hstar);
  for (int i = 0; i <= r; ++i) sum += star_mul(powers[i], powers[r - i]);
  for (int j = 1; j * d <= r; ++j) {
    const Rational got = sum.coefficient(r - j * d, j);
    const Rational want = -Rational(r - j * d + 1) * top[j - 1];
    if (got != want) {
      return make("euler.prime_identity", false,
                  "j=" + std::to_string(j) + ": " + to_string(got) + " vs " + to_string(want));
    }
  }
  return make("euler.prime_identity", true);
}

CheckResult check_shifted_euler(const ContextPtr& hstar) {
  if (!hstar->space().borderline) return skip("euler.shifted_coefficients", "needs |m| = r + L");
  const RingElement e = euler_shifted(hstar);
  const auto want = euler_shifted_expected(hstar->space());
  const int r = hstar->dim();
  RingElement expected(e.context_ptr());
  for (int j = 0; j <= r; ++j) expected.add_term(r - j, j, want[j]);
  if (e != expected) {
    return make("euler.shifted_coefficients", false,
                "got " + describe(e) + ", want " + describe(expected));
  }
  return make("euler.shifted_coefficients", true, describe(e, 3));
}

CheckResult check_shifted_euler_scalar(const ContextPtr& hstar) {
  if (!hstar->space().borderline) return skip("euler.shifted_scalar", "needs |m| = r + L");
  const RingElement e = euler_shifted(hstar);
  const int r = hstar->dim();
  const RingElement t = RingElement::term(e.context_ptr(), 1);
  const RingElement lhs = star_mul(star_pow(t, r), e);
  const Rational scalar = shifted_euler_scalar(hstar->space());
  const RingElement rhs = star_pow(t, 2 * r) * scalar;
  return make("euler.shifted_scalar", lhs == rhs, "scalar = " + to_string(scalar));
}

std::vector<CheckResult> check_tevelev(const TevelevSolver& solver, const VerifyOptions& opt) {
  const FanoSpace& s = solver.space();
  const auto queries = valid_queries(s, opt.tevelev_g_max, opt.tevelev_n_max);
  const auto results = solve_batch_parallel(solver, queries);

  std::string agree_fail, grading_fail, window_fail, denom_fail;
  int integral = 0;
  for (const auto& bd : results) {
    const std::string tag =
        "(g=" + std::to_string(bd.query.g) + ",n=" + std::to_string(bd.query.n) + ")";
    if (!bd.routes_agree() && agree_fail.empty()) {
      agree_fail = tag + ": direct " + to_string(bd.value_direct) + ", closed " +
                   to_string(bd.value_closed);
    }
    const int want = s.r * (bd.query.n + bd.query.g);
    if (bd.grading != -1 && bd.grading != want && grading_fail.empty()) {
      grading_fail = tag + ": grading " + std::to_string(bd.grading) + ", want " +
                     std::to_string(want);
    }
    if (bd.grading != -1 && s.r + s.fano_index * bd.k != want && grading_fail.empty()) {
      grading_fail = tag + ": r + d k != r(n + g)";
    }
    if (!bd.outside_window.empty() && window_fail.empty()) {
      window_fail = tag + ": " + std::to_string(bd.outside_window.size()) + " extra terms";
    }
    if (!divides_power_of(bd.value_direct.get_den(), s.degree) && denom_fail.empty()) {
      denom_fail = tag + ": value " + to_string(bd.value_direct);
    }
    if (bd.value_direct.get_den() == 1) ++integral;
  }
  const std::string count = std::to_string(results.size()) + " queries";
  return {
      make("tevelev.routes_agree", agree_fail.empty(), agree_fail.empty() ? count : agree_fail),
      make("tevelev.grading", grading_fail.empty(), grading_fail.empty() ? count : grading_fail),
      make("tevelev.window", window_fail.empty(),
           window_fail.empty() ? "no terms outside the b_i window" : window_fail),
      make("tevelev.denominators", denom_fail.empty(),
           denom_fail.empty() ? std::to_string(integral) + "/" + std::to_string(results.size()) +
                                    " values integral"
                              : denom_fail),
  };
}

VerifyReport run_verify(const FanoSpace& space, GWTable& table, const VerifyOptions& opt) {
  VerifyReport report{space, {}};
  auto& out = report.checks;
  const ContextPtr hstar = RingContext::make(space, Basis::HStar);
  const int k_fill = std::max(opt.alpha_k_max, (space.r + 1) / space.fano_index);

  out.push_back(check_space_invariants(space));
  if (!table.memo().empty()) out.push_back(check_recompute(table));
  out.push_back(check_givental(table));
  out.push_back(check_alpha_symmetry(space, opt.alpha_k_max));
  out.push_back(check_memo_determinism(table));
  out.push_back(check_denominators(table));
  out.push_back(check_parallel_fill(space, k_fill));

  out.push_back(check_closed_form_oracle(hstar, table));
  out.push_back(check_star_homogeneity(hstar, opt));
  out.push_back(check_star_commutative(hstar, opt));
  out.push_back(check_star_associative(hstar, opt));
  if (space.borderline) {
    const ContextPtr shifted = RingContext::make(space, Basis::Shifted);
    out.push_back(check_star_homogeneity(shifted, opt));
    out.push_back(check_star_commutative(shifted, opt));
    out.push_back(check_star_associative(shifted, opt));
  }
  out.push_back(check_shift_round_trip(hstar, opt));
  out.push_back(check_shift_product(hstar, opt));
  out.push_back(check_binomial_identities(20));

  out.push_back(check_euler_routes(hstar, table));
  out.push_back(check_euler_top(hstar));
  out.push_back(check_h_times_gamma(hstar, table));
  out.push_back(check_euler_prime_identity(hstar, table));
  out.push_back(check_shifted_euler(hstar));
  out.push_back(check_shifted_euler_scalar(hstar));

  const TevelevSolver solver(hstar, table);
  for (auto& c : check_tevelev(solver, opt)) out.push_back(std::move(c));
  return report;
}

VerifyReport run_verify(const FanoSpace& space, const VerifyOptions& opt) {
  GWTable table(space, 1);
  return run_verify(space, table, opt);
}

}  // namespace qhci
