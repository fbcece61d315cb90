#pragma once

#include "qhci/qring.hpp"

#include <vector>

namespace qhci {

/// Quantum Euler class from its closed formula, in the H_star basis. Only
/// the scalar invariants of the space enter.
RingElement euler_closed(const ContextPtr& context);

/// Gamma, the contribution of the primitive classes to the diagonal:
/// m^{-1}(chi - r - 1) H^{*r} + m^{-1}(r + 1 - chi) sum_j C_j q^j H^{*(r-jd)},
/// with C_j from hstar_top_coefficients.
RingElement gamma_class(const ContextPtr& context, GWTable& table);

/// E' = m^{-1} sum_i H^i * H^{r-i}, the restricted part of the diagonal.
RingElement euler_prime(const ContextPtr& context, GWTable& table);

/// Gamma + E'.
RingElement euler_constructive(const ContextPtr& context, GWTable& table);

/// euler_closed moved to the (H + m!q) basis; index-one spaces only.
RingElement euler_shifted(const ContextPtr& context);

/// Expected coefficients of q^j (H + m!q)^{*(r-j)}, j = 0..r, in
/// euler_shifted, evaluated from their own closed formula.
std::vector<Rational> euler_shifted_expected(const FanoSpace& space);

/// Scalar s with (H + m!q)^{*r} * E = s (H + m!q)^{*2r} on index-one spaces:
/// m^{-1} - m^{-rm-1} (m!)^r (r + 1 - chi).
Rational shifted_euler_scalar(const FanoSpace& space);

}  // namespace qhci
