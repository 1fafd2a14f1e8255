#pragma once

#include <cstddef>
#include <vector>

#include "bellforge/identity_report.hpp"
#include "bellforge/quadrature.hpp"
#include "bellforge/zeta_constants.hpp"

namespace bellforge {

/// Gamma^{(m)}(1) = Y_m(-0!zeta(1), 1!zeta(2), ..., (-1)^m (m-1)! zeta(m)), zeta(1) = gamma.
/// Requires 1 <= m <= constants.max_m().
double gamma_deriv_at_one(unsigned m, const ZetaConstants& constants);

/// int_0^inf e^{-t} log^m t dt, split at t = 1 with t = e^{-u} on the lower piece.
/// Requires m <= 10.
QuadratureResult gamma_deriv_quadrature(unsigned m);

/// Gamma(z) for z > 0: Stirling series at z + n >= 20, brought back by the
/// recurrence. Independent of the zeta constants.
double gamma_reference(double z);

/// Bell form against quadrature for m = 1..m_quad (1e-8), the sign pattern (-1)^m for
/// m = 1..m_sign, and Gamma''(1) = gamma^2 + zeta(2).
std::vector<IdentityReport> gamma_deriv_check(unsigned m_quad, unsigned m_sign, const ZetaConstants& constants);

/// Truncated Maclaurin series of Gamma(1+x) and 1/Gamma(1+x) through x^N (from
/// the zeta constants) against gamma_reference at x = 0.1, 0.25, -0.25, tolerance 1e-8.
/// Requires 2 <= N <= constants.max_m().
std::vector<IdentityReport> gamma_series_check(std::size_t N, const ZetaConstants& constants);

/// Barnes G through the Bell expansion of 1/G(1+x) with c_1 = (log 2pi - 1)/2,
/// c_2 = 1 + gamma, c_n = zeta(n-1):
///   G'(1) against (log 2pi - 1)/2 (1e-12), both from the series and from the
///   Weierstrass product by Richardson differentiation;
///   sign of the m-th derivative of 1/G(1+x) at 0 is (-1)^m, m = 1..8;
///   series 1/G(1+x) against the product at x = 0.1, 0.25, -0.25 (1e-8).
/// Requires 3 <= N <= constants.max_m() + 1.
std::vector<IdentityReport> barnes_g_check(std::size_t N, const ZetaConstants& constants);

/// log G(1+x) from the Weierstrass product with an asymptotic tail; |x| < 1.
double log_barnes_g_product(double x, const ZetaConstants& constants);

}  // namespace bellforge
