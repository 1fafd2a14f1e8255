#pragma once

#include <cstddef>
#include <vector>

#include "bellforge/identity_report.hpp"
#include "bellforge/rational.hpp"

namespace bellforge {

/// Parameters of sum_{k=0}^n C(n,k) (-1)^k / (k+x)^{r+1}.
/// x + k must be nonzero for 0 <= k <= n.
struct AltSumParams {
  unsigned n = 1;
  unsigned r = 0;
  Rational x = 1;
};

/// Direct evaluation of the sum. Throws PoleError on x + k = 0.
Rational alternating_sum_brute(const AltSumParams& p);

/// n!/(x)_{n+1} * (1/r!) Y_r(0!H_{n+1}^{(1)}(x), 1!H_{n+1}^{(2)}(x), ...).
/// Throws PoleError on x + k = 0.
Rational coppo_bell(const AltSumParams& p);

/// The same value through the sign-alternated arguments:
/// n!/(x)_{n+1} * (-1)^r/r! Y_r(-0!H^{(1)}, 1!H^{(2)}, ..., (-1)^r (r-1)!H^{(r)}).
Rational coppo_bell_signed(const AltSumParams& p);

/// S_n(r) = sum_{k=1}^n C(n,k) (-1)^k / k^r, with S_n(0) = -1.
Rational snr_brute(unsigned n, unsigned r);

/// S_n(r) = -(1/r!) Y_r(0!H_n^{(1)}, 1!H_n^{(2)}, ..., (r-1)!H_n^{(r)}).
/// r = 0 gives -1. Requires n >= 1.
Rational snr_bell(unsigned n, unsigned r);

/// S_n(r) = -(-1)^r/r! Y_r(-0!H_n^{(1)}, 1!H_n^{(2)}, ..., (-1)^r (r-1)!H_n^{(r)}).
Rational snr_bell_signed(unsigned n, unsigned r);

/// -H_n.
Rational snr_euler(unsigned n);
/// -(H_n^{(2)} + [H_n]^2) / 2.
Rational snr_quadratic(unsigned n);
/// -([H_n]^3/6 + H_n H_n^{(2)}/2 + H_n^{(3)}/3).
Rational snr_cubic(unsigned n);

/// Exact truncated-series checks (order N) of the exponential identities around
/// the gamma ratio Gamma(1-x)Gamma(n+1)/Gamma(n+1-x):
///   coefficients -S_n(r) against Y_r(H_n...)/r!, against exp(sum H_n^{(m)} x^m/m),
///   and against prod_{k=1}^n 1/(1 - x/k);
///   prod_{k=1}^{n-1}(1 + x/k) against exp(sum (-1)^{m+1} H_{n-1}^{(m)} x^m/m), its log,
///   and its reciprocal.
/// Requires n >= 1, N >= 2.
std::vector<IdentityReport> gamma_ratio_series_check(unsigned n, std::size_t N);

/// sum_r t^r (-1)^r (x)_{n+1}/n! * sum_k C(n,k)(-1)^k/(k+x)^{r+1}
///   = exp(sum_r (-1)^r H_{n+1}^{(r)}(x) t^r / r), checked to order N.
IdentityReport general_exp_identity_check(unsigned n, const Rational& x, std::size_t N);

/// (1/(t-1)) Li_r(-t/(1-t)) expanded by series composition, compared at t^0..t^N
/// with -S_n(r) (brute force) and with (1/r!) Y_r(H_n...). Requires r >= 1, N >= 2.
std::vector<IdentityReport> polylog_identity_check(unsigned r, std::size_t N);

struct ZetaHalfResult {
  double value = 0.0;
  /// Magnitude of the last included term (after the leading factor).
  double last_term = 0.0;
};

/// zeta(r) = 1/((1 - 2^{1-r}) r!) sum_{n=1}^T 2^{-(n+1)} Y_r(0!H_n^{(1)}, ..., (r-1)!H_n^{(r)}).
/// The partial sum is accumulated exactly. Requires r >= 2, T >= 1.
ZetaHalfResult zeta_via_half(unsigned r, unsigned T);

}  // namespace bellforge
