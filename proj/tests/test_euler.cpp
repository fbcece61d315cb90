#include "qhci/euler.hpp"

#include <doctest.h>

using namespace qhci;

TEST_SUITE("euler") {
  TEST_CASE("quadric and cubic threefolds") {
    const auto quadric = RingContext::make(validate_space(3, {2}), Basis::HStar);
    RingElement want = RingElement::term(quadric, 3, 0, 2);
    want.add_term(0, 1, -2);
    CHECK(euler_closed(quadric) == want);

    const auto cubic = RingContext::make(validate_space(3, {3}), Basis::HStar);
    RingElement want_cubic = RingElement::term(cubic, 3, 0, -2);
    want_cubic.add_term(1, 1, 72);
    CHECK(euler_closed(cubic) == want_cubic);
  }

  TEST_CASE("quartic threefold in both bases") {
    const auto ctx = RingContext::make(validate_space(3, {4}), Basis::HStar);
    const RingElement e = euler_closed(ctx);
    CHECK(e.coefficient(3, 0) == -14);
    CHECK(e.coefficient(2, 1) == 2280);
    const RingElement shifted = euler_shifted(ctx);
    CHECK(shifted.coefficient(2, 1) == 3288);

    const auto expected = euler_shifted_expected(ctx->space());
    for (int j = 0; j <= 3; ++j) CHECK(shifted.coefficient(3 - j, j) == expected[j]);
  }

  TEST_CASE("closed and constructive routes agree") {
    for (const auto& s : space_grid(3, 6, 2, 2, 4)) {
      CAPTURE(s.label());
      const auto ctx = RingContext::make(s, Basis::HStar);
      GWTable table(s, 1);
      CHECK(euler_closed(ctx) == euler_constructive(ctx, table));
      CHECK(euler_closed(ctx).coefficient(s.r, 0) == s.inverse_degree() * Rational(s.euler_char));
    }
  }

  TEST_CASE("H * Gamma") {
    for (const auto& s : space_grid(3, 6, 2, 2, 4)) {
      CAPTURE(s.label());
      const auto ctx = RingContext::make(s, Basis::HStar);
      GWTable table(s, 1);
      const RingElement p = star_mul(RingElement::term(ctx, 1), gamma_class(ctx, table));
      if (!s.borderline) {
        CHECK(p.is_zero());
        continue;
      }
      // On index-one spaces a single q^{r+1} term survives:
      // m^{-1}(chi - r - 1) * C_{r+1} with C_{r+1} = (m!)^r (m^m - m!).
      const Rational a = s.inverse_degree() * (Rational(s.euler_char) - (s.r + 1));
      const Rational c = pow(Rational(s.m_factorial), s.r) * (s.m_to_m() - Rational(s.m_factorial));
      CHECK(p == RingElement::term(ctx, 0, s.r + 1, a * c));
    }
    const auto quartic = RingContext::make(validate_space(3, {4}), Basis::HStar);
    GWTable table(quartic->space(), 1);
    CHECK(star_mul(RingElement::term(quartic, 1), gamma_class(quartic, table)) ==
          RingElement::term(quartic, 0, 4, -48107520));
  }

  TEST_CASE("(H+m!q)^r * E is a multiple of (H+m!q)^2r") {
    for (const auto& s : space_grid(3, 6, 2, 2, 4)) {
      if (!s.borderline) continue;
      CAPTURE(s.label());
      const RingElement e = euler_shifted(RingContext::make(s, Basis::HStar));
      const RingElement t = RingElement::term(e.context_ptr(), 1);
      CHECK(star_mul(star_pow(t, s.r), e) == star_pow(t, 2 * s.r) * shifted_euler_scalar(s));
    }
    CHECK_THROWS_AS(euler_shifted_expected(validate_space(3, {3})), Error);
  }
}
