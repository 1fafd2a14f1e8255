#pragma once

#include <vector>

#include "bellforge/identity_report.hpp"
#include "bellforge/quadrature.hpp"
#include "bellforge/rational.hpp"

namespace bellforge {

/// int_0^1 t^{x-1} (1-t)^{n-1} log^r t dt, integrated as
/// int_0^inf e^{-xu} (-u)^r (1-e^{-u})^{n-1} du. Requires x > 0, n >= 1.
QuadratureResult log_beta_integral(unsigned n, unsigned r, const Rational& x);

/// (n-1)!/(x)_n * Y_r(-0!H_n^{(1)}(x), 1!H_n^{(2)}(x), ..., (-1)^r (r-1)!H_n^{(r)}(x)).
Rational log_beta_exact(unsigned n, unsigned r, const Rational& x);

/// log_beta_integral against log_beta_exact, tolerance 1e-10.
IdentityReport log_beta_check(unsigned n, unsigned r, const Rational& x);

/// (-1)^{r+1} n int_0^1 (1-t)^{n-1} log^r t dt = r! S_n(r), tolerance 1e-9.
IdentityReport integral_sum_bridge(unsigned n, unsigned r);

/// For every n = 1..N, exactly:
///   sum_{k<=n} H_k/k = ([H_n]^2 + H_n^{(2)})/2
///   sum_{k<=n} H_k^{(2)}/k + sum_{k<=n} H_k/k^2 = H_n^{(3)} + H_n H_n^{(2)}
///   Devoto-Duke double sums for the log^2 and log^3 integrals against the Bell values.
/// The log^3 form is tried with the inner bound j <= k-2; where that fails the
/// j <= k-1 variant is reported instead, tagged with a "warning" param.
std::vector<IdentityReport> adamchik_check(unsigned N);

/// sum_{n=1}^T (n-1)!/(a)_n plus the exact tail T!/((a-1)(a)_T) against 1/(a-1).
/// Requires a >= 2, T >= 1.
IdentityReport norlund_telescope(unsigned a, unsigned T);

/// Exact partial sum sum_{n=1}^T (n-1)!/(a)_n.
Rational norlund_partial_sum(unsigned a, unsigned T);

/// (-1)^r r! zeta(r+1, a) from the Hurwitz series against
/// int_0^inf (-u)^r e^{-au} / (1 - e^{-u}) du, tolerance 1e-8. Requires r >= 1, a > 0.
IdentityReport hurwitz_integral_check(unsigned r, const Rational& a);

/// zeta(s, a) = sum_{k>=0} (k+a)^{-s} by direct summation with an Euler-Maclaurin tail.
double hurwitz_zeta(unsigned s, double a);

}  // namespace bellforge
