// Acceptance gate: one PASS/FAIL line per criterion, exact comparisons only.

#include "qhci/euler.hpp"
#include "qhci/io.hpp"
#include "qhci/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>

using namespace qhci;

namespace {

struct Outcome {
  std::string title;
  std::vector<std::pair<bool, std::string>> items;  // sub-checks, printed under the line

  bool passed() const {
    for (const auto& [ok, text] : items) {
      if (!ok) return false;
    }
    return true;
  }
  void add(bool ok, std::string text) { items.emplace_back(ok, std::move(text)); }
};

const std::vector<FanoSpace>& grid() {
  static const std::vector<FanoSpace> spaces = space_grid(3, 6, 2, 2, 4);
  return spaces;
}

// Runs `check` on every grid space in parallel; a non-empty string is a failure.
void over_grid(Outcome& out, const std::function<std::string(const FanoSpace&)>& check) {
  const auto& spaces = grid();
  std::vector<std::string> failures(spaces.size());
  const int n = static_cast<int>(spaces.size());
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < n; ++t) {
    try {
      failures[t] = check(spaces[t]);
    } catch (const std::exception& e) {
      failures[t] = std::string("exception: ") + e.what();
    }
  }
  int bad = 0;
  for (std::size_t t = 0; t < spaces.size(); ++t) {
    if (!failures[t].empty()) {
      ++bad;
      out.add(false, spaces[t].label() + ": " + failures[t]);
    }
  }
  out.add(bad == 0, std::to_string(spaces.size() - bad) + "/" + std::to_string(spaces.size()) +
                        " grid spaces");
}

std::string from_check(const CheckResult& c) { return c.passed() ? "" : c.detail; }

Outcome givental() {
  Outcome out{"Givental consistency of top coefficients", {}};
  over_grid(out, [](const FanoSpace& s) {
    GWTable table(s, 1);
    return from_check(check_givental(table));
  });
  return out;
}

Outcome euler_routes() {
  Outcome out{"closed Euler class equals the diagonal construction", {}};
  over_grid(out, [](const FanoSpace& s) {
    GWTable table(s, 1);
    return from_check(check_euler_routes(RingContext::make(s, Basis::HStar), table));
  });
  return out;
}

Outcome tevelev_routes() {
  Outcome out{"Tevelev closed formula equals the ring computation (g <= 2, n <= 4)", {}};
  over_grid(out, [](const FanoSpace& s) -> std::string {
    GWTable table(s, 1);
    const TevelevSolver solver(RingContext::make(s, Basis::HStar), table);
    for (const auto& q : valid_queries(s, 2, 4)) {
      const auto bd = solver.solve(q);
      if (!bd.routes_agree()) {
        return "g=" + std::to_string(q.g) + " n=" + std::to_string(q.n) + ": direct " +
               to_string(bd.value_direct) + ", closed " + to_string(bd.value_closed);
      }
    }
    return "";
  });
  return out;
}

template <typename T>
void expect(Outcome& out, const std::string& what, const T& got, const T& want,
            const std::function<std::string(const T&)>& show) {
  const bool ok = got == want;
  out.add(ok, what + " = " + show(got) + (ok ? "" : " (expected " + show(want) + ")"));
}

std::string show_rational(const Rational& x) { return to_string(x); }
std::string show_integer(const Integer& x) { return to_string(x); }
std::string show_list(const std::vector<Rational>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + to_string(xs[i]);
  return s + "]";
}
std::string show_element(const RingElement& e) { return ring_element_json(e)["terms"].dump(); }

std::vector<Rational> ints(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Outcome fixtures() {
  Outcome out{"fixture values", {}};

  const FanoSpace quadric = validate_space(3, {2});
  const auto qctx = RingContext::make(quadric, Basis::HStar);
  GWTable qtable(quadric, 1);
  expect<Integer>(out, "quadric chi", quadric.euler_char, 4, show_integer);
  RingElement qe = RingElement::term(qctx, 3, 0, 2);
  qe.add_term(0, 1, -2);
  expect<RingElement>(out, "quadric E", euler_closed(qctx), qe, show_element);
  const TevelevSolver qsolver(qctx, qtable);
  const auto t03 = qsolver.solve({0, 3});
  expect<Rational>(out, "quadric vTev(g=0,n=3,k=" + std::to_string(t03.k) + ")",
                   t03.value_direct, 1, show_rational);
  out.add(t03.k == 2, "quadric k(g=0,n=3) = " + std::to_string(t03.k));
  const auto t11 = qsolver.solve({1, 1});
  expect<Rational>(out, "quadric vTev(g=1,n=1,k=" + std::to_string(t11.k) + ")",
                   t11.value_direct, 2, show_rational);
  out.add(t11.k == 1, "quadric k(g=1,n=1) = " + std::to_string(t11.k));
  expect<Rational>(out, "quadric Disc(g=1,n=1)", t11.disc, 1, show_rational);

  const FanoSpace cubic = validate_space(3, {3});
  const auto cctx = RingContext::make(cubic, Basis::HStar);
  expect<Integer>(out, "cubic chi", cubic.euler_char, -6, show_integer);
  RingElement ce = RingElement::term(cctx, 3, 0, -2);
  ce.add_term(1, 1, 72);
  expect<RingElement>(out, "cubic E", euler_closed(cctx), ce, show_element);

  const FanoSpace quartic = validate_space(3, {4});
  const auto xctx = RingContext::make(quartic, Basis::HStar);
  GWTable xtable(quartic, 1);
  expect<Integer>(out, "quartic chi", quartic.euler_char, -56, show_integer);
  expect<Rational>(out, "quartic H_star j=1 Euler coefficient",
                   euler_closed(xctx).coefficient(2, 1), 2280, show_rational);
  expect<Rational>(out, "quartic shifted j=1 Euler coefficient",
                   euler_shifted(xctx).coefficient(2, 1), 3288, show_rational);
  expect<std::vector<Rational>>(out, "quartic top coefficients", hstar_top_coefficients(xtable),
                                ints({160, 14976, 387072, 3207168}), show_list);

  expect<Integer>(out, "(2,2) in P^5 chi", validate_space(3, {2, 2}).euler_char, 0, show_integer);
  expect<std::vector<Rational>>(out, "quadric k=1 base row", base_descendant_row(quadric, 1),
                                ints({0, 8, -8, 4}), show_list);
  expect<std::vector<Rational>>(out, "quartic k=1 base row", base_descendant_row(quartic, 1),
                                ints({0, -320, 320, 96}), show_list);
  return out;
}

Outcome alpha_symmetry() {
  Outcome out{"alpha symmetry through independent recursion paths (k <= 3)", {}};
  over_grid(out, [](const FanoSpace& s) { return from_check(check_alpha_symmetry(s, 3)); });
  return out;
}

Outcome closed_form_oracle() {
  Outcome out{"nested-sum closed form equals the classical-to-quantum expansion", {}};
  over_grid(out, [](const FanoSpace& s) {
    GWTable table(s, 1);
    return from_check(check_closed_form_oracle(RingContext::make(s, Basis::HStar), table));
  });
  return out;
}

Outcome binomials() {
  Outcome out{"binomial identities for 2 <= j <= r <= 20", {}};
  const CheckResult c = check_binomial_identities(20);
  out.add(c.passed(), c.detail);
  return out;
}

Outcome euler_identities() {
  Outcome out{"H * Gamma = 0, Coeff(E, e_r) = chi/m, (H+m!q)^r * E is a multiple of (H+m!q)^2r", {}};

  Outcome gamma{"", {}};
  over_grid(gamma, [](const FanoSpace& s) {
    GWTable table(s, 1);
    return from_check(check_h_times_gamma(RingContext::make(s, Basis::HStar), table));
  });
  for (auto& [ok, text] : gamma.items) out.add(ok, "H * Gamma = 0: " + text);

  Outcome low{"", {}};
  over_grid(low, [](const FanoSpace& s) -> std::string {
    GWTable table(s, 1);
    const auto ctx = RingContext::make(s, Basis::HStar);
    const RingElement p = star_mul(RingElement::term(ctx, 1), gamma_class(ctx, table));
    for (int j = 1; j * s.fano_index <= s.r; ++j) {
      const Rational c = p.coefficient(s.r + 1 - j * s.fano_index, j);
      if (c != 0) return "j=" + std::to_string(j) + " coefficient " + to_string(c);
    }
    return "";
  });
  for (auto& [ok, text] : low.items) {
    out.add(ok, "H * Gamma coefficients with j <= r/d vanish (diagnostic): " + text);
  }

  Outcome top{"", {}};
  over_grid(top, [](const FanoSpace& s) {
    return from_check(check_euler_top(RingContext::make(s, Basis::HStar)));
  });
  for (auto& [ok, text] : top.items) out.add(ok, "Coeff(E, e_r) = chi/m: " + text);

  Outcome cor{"", {}};
  over_grid(cor, [](const FanoSpace& s) {
    return from_check(check_shifted_euler_scalar(RingContext::make(s, Basis::HStar)));
  });
  for (auto& [ok, text] : cor.items) out.add(ok, "(H+m!q)^r * E scalar identity: " + text);
  return out;
}

Outcome cache_round_trip() {
  Outcome out{"cache save/load/recompute on the quartic threefold, k <= 4", {}};
  const FanoSpace s = validate_space(3, {4});
  GWTable table(s, 4);
  fill_levels_parallel(table, 4);
  const auto path = std::filesystem::temp_directory_path() / "qhci_acceptance_cache.json";
  save_cache(path, table);

  GWTable loaded(s, 1);
  const std::size_t n = load_cache(path, loaded);
  std::filesystem::remove(path);
  out.add(n == table.memo().size() && loaded.memo() == table.memo(),
          std::to_string(n) + " entries reloaded identically");
  const CheckResult c = check_recompute(loaded);
  out.add(c.passed(), "recomputed from scratch: " + c.detail);

  try {
    GWTable other(validate_space(3, {3}), 1);
    merge_cache(cache_json(table), other);
    out.add(false, "mismatched header accepted");
  } catch (const Error& e) {
    out.add(e.code() == ErrorCode::CacheMismatch, "mismatched header rejected");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  bool verbose = false;
  app.add_option("--criterion", only, "Run a single criterion (1-9)")->check(CLI::Range(0, 9));
  app.add_flag("--verbose", verbose, "Print passing sub-checks too");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome()>> criteria = {
      givental,         euler_routes, tevelev_routes,  fixtures,        alpha_symmetry,
      closed_form_oracle, binomials,  euler_identities, cache_round_trip};

  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const int id = static_cast<int>(c) + 1;
    if (only != 0 && only != id) continue;
    const Outcome o = criteria[c]();
    std::printf("AC%d %s  %s\n", id, o.passed() ? "PASS" : "FAIL", o.title.c_str());
    for (const auto& [ok, text] : o.items) {
      if (!ok || verbose || o.items.size() <= 20) {
        std::printf("    %s %s\n", ok ? "ok  " : "FAIL", text.c_str());
      }
    }
    failed += o.passed() ? 0 : 1;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
