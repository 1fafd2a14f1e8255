#include "bellforge/alternating.hpp"

#include <stdexcept>
#include <string>

#include "bellforge/bell.hpp"
#include "bellforge/combinatorics.hpp"
#include "bellforge/errors.hpp"
#include "bellforge/harmonic.hpp"
#include "bellforge/series.hpp"

namespace bellforge {

namespace {

Rational inv_factorial(unsigned r) { return Rational(BigInt(1), factorial(r)); }

void require_n(unsigned n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

// n! / (x)_{n+1}; pochhammer vanishes exactly when some x + k is zero.
Rational coppo_prefactor(const AltSumParams& p) {
  const Rational poch = pochhammer(p.x, p.n + 1);
  if (poch.is_zero()) throw PoleError("coppo: x + k = 0 for some 0 <= k <= n");
  return Rational(factorial(p.n)) / poch;
}

// -S_n(r) for r = 0..N, from the brute-force sum.
RationalSeries minus_snr_series(unsigned n, std::size_t N) {
  return series::generate<Rational>(N, [&](std::size_t r) { return -snr_brute(n, static_cast<unsigned>(r)); });
}

}  // namespace

Rational alternating_sum_brute(const AltSumParams& p) {
  Rational total;
  for (unsigned k = 0; k <= p.n; ++k) {
    const Rational base = p.x + Rational(k);
    if (base.is_zero()) throw PoleError("alternating sum: x + k = 0 at k = " + std::to_string(k));
    const Rational term = Rational(binomial(p.n, k)) / base.pow(static_cast<int>(p.r + 1));
    if (k % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

Rational coppo_bell(const AltSumParams& p) {
  const Rational pre = coppo_prefactor(p);
  const auto args = harmonic_bell_args(p.n + 1, p.r, p.x, HarmonicSigns::kAllPositive);
  return pre * inv_factorial(p.r) * bell<Rational>(args);
}

Rational coppo_bell_signed(const AltSumParams& p) {
  const Rational pre = coppo_prefactor(p);
  const auto args = harmonic_bell_args(p.n + 1, p.r, p.x, HarmonicSigns::kMinusPlus);
  return pre * Rational(minus_one_pow(p.r)) * inv_factorial(p.r) * bell<Rational>(args);
}

Rational snr_brute(unsigned n, unsigned r) {
  Rational total;
  for (unsigned k = 1; k <= n; ++k) {
    const Rational term = Rational(binomial(n, k)) / Rational(k).pow(static_cast<int>(r));
    if (k % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

Rational snr_bell(unsigned n, unsigned r) {
  require_n(n, "snr_bell");
  const auto args = harmonic_bell_args(n, r, 1, HarmonicSigns::kAllPositive);
  return -inv_factorial(r) * bell<Rational>(args);
}

Rational snr_bell_signed(unsigned n, unsigned r) {
  require_n(n, "snr_bell_signed");
  const auto args = harmonic_bell_args(n, r, 1, HarmonicSigns::kMinusPlus);
  return -Rational(minus_one_pow(r)) * inv_factorial(r) * bell<Rational>(args);
}

Rational snr_euler(unsigned n) { return -harmonic(n, 1); }

Rational snr_quadratic(unsigned n) {
  const Rational h = harmonic(n, 1);
  return Rational(-1, 2) * (harmonic(n, 2) + h * h);
}

Rational snr_cubic(unsigned n) {
  const Rational h = harmonic(n, 1);
  return -(Rational(1, 6) * h * h * h + Rational(1, 2) * h * harmonic(n, 2) + Rational(1, 3) * harmonic(n, 3));
}

std::vector<IdentityReport> gamma_ratio_series_check(unsigned n, std::size_t N) {
  require_n(n, "gamma_ratio_series_check");
  if (N < 2) throw std::invalid_argument("gamma_ratio_series_check: N must be >= 2");
  const Params params{{"n", std::to_string(n)}, {"N", std::to_string(N)}};
  const RationalSeries lhs = minus_snr_series(n, N);

  std::vector<IdentityReport> out;

  out.push_back(exact_report("alternating-bell-egf", params, lhs,
                             series::generate<Rational>(N, [&](std::size_t r) {
                               const auto args = harmonic_bell_args(n, static_cast<unsigned>(r), 1,
                                                                    HarmonicSigns::kAllPositive);
                               return inv_factorial(static_cast<unsigned>(r)) * bell<Rational>(args);
                             })));

  // exp(sum_m H_n^{(m)} x^m / m): log-derivative coefficients are H_n^{(m)} themselves.
  const RationalSeries b_n = series::generate<Rational>(N, [&](std::size_t m) {
    return m == 0 ? Rational(0) : harmonic(n, static_cast<unsigned>(m));
  });
  out.push_back(exact_report("alternating-exp-harmonic", params, lhs, series::exp_recurrence(b_n, N)));

  RationalSeries gamma_ratio = RationalSeries::one(N);
  for (unsigned k = 1; k <= n; ++k) {
    const Rational c(1, k);
    gamma_ratio = series::mul(gamma_ratio, series::generate<Rational>(N, [&](std::size_t j) {
                                return c.pow(static_cast<int>(j));
                              }), N);
  }
  out.push_back(exact_report("gamma-ratio-alternating", params, gamma_ratio, lhs));

  // Wilf: Gamma(n+x)/(Gamma(1+x)Gamma(n)) = prod_{k=1}^{n-1} (1 + x/k).
  RationalSeries wilf = RationalSeries::one(N);
  for (unsigned k = 1; k < n; ++k) wilf = series::mul(wilf, series::linear(Rational(1, k), N), N);
  const RationalSeries b_wilf = series::generate<Rational>(N, [&](std::size_t m) {
    return m == 0 ? Rational(0)
                  : Rational(minus_one_pow(static_cast<std::int64_t>(m) + 1)) * harmonic(n - 1, static_cast<unsigned>(m));
  });
  out.push_back(exact_report("wilf-gamma-ratio", params, wilf, series::exp_recurrence(b_wilf, N)));

  out.push_back(exact_report("log-gamma-ratio-maclaurin", params, series::log(wilf, N),
                             series::generate<Rational>(N, [&](std::size_t m) {
                               return m == 0 ? Rational(0) : b_wilf[m] / Rational(static_cast<long>(m));
                             })));

  out.push_back(exact_report("wilf-gamma-ratio-reciprocal", params, series::reciprocal(wilf, N),
                             series::exp_recurrence(Rational(-1) * b_wilf, N)));
  return out;
}

IdentityReport general_exp_identity_check(unsigned n, const Rational& x, std::size_t N) {
  const Params params{{"n", std::to_string(n)}, {"x", x.str()}, {"N", std::to_string(N)}};
  try {
    const Rational scale = pochhammer(x, n + 1) / Rational(factorial(n));
    const RationalSeries lhs = series::generate<Rational>(N, [&](std::size_t r) {
      const AltSumParams p{n, static_cast<unsigned>(r), x};
      return Rational(minus_one_pow(static_cast<std::int64_t>(r))) * scale * alternating_sum_brute(p);
    });
    const RationalSeries b = series::generate<Rational>(N, [&](std::size_t r) {
      return r == 0 ? Rational(0)
                    : Rational(minus_one_pow(static_cast<std::int64_t>(r))) *
                          harmonic_shifted(n + 1, static_cast<unsigned>(r), x);
    });
    return exact_report("shifted-alternating-exp", params, lhs, series::exp_recurrence(b, N));
  } catch (const PoleError& e) {
    return error_report("shifted-alternating-exp", params, e.what());
  }
}

std::vector<IdentityReport> polylog_identity_check(unsigned r, std::size_t N) {
  if (r < 1) throw std::invalid_argument("polylog_identity_check: r must be >= 1");
  if (N < 2) throw std::invalid_argument("polylog_identity_check: N must be >= 2");
  const Params params{{"r", std::to_string(r)}, {"N", std::to_string(N)}};

  // -t/(1-t) = -t - t^2 - ...
  const RationalSeries inner = series::generate<Rational>(N, [](std::size_t n) {
    return n == 0 ? Rational(0) : Rational(-1);
  });
  const RationalSeries composed = series::compose(series::polylog(r, N), inner, N);
  const RationalSeries lhs = series::mul(Rational(-1) * series::geometric(N), composed, N);

  std::vector<IdentityReport> out;
  out.push_back(exact_report("polylog-alternating", params, lhs,
                             series::generate<Rational>(N, [&](std::size_t n) {
                               return n == 0 ? Rational(0) : -snr_brute(static_cast<unsigned>(n), r);
                             })));
  out.push_back(exact_report("polylog-bell", params, lhs, series::generate<Rational>(N, [&](std::size_t n) {
                               if (n == 0) return Rational(0);
                               const auto args =
                                   harmonic_bell_args(static_cast<unsigned>(n), r, 1, HarmonicSigns::kAllPositive);
                               return inv_factorial(r) * bell<Rational>(args);
                             })));
  return out;
}

ZetaHalfResult zeta_via_half(unsigned r, unsigned T) {
  if (r < 2) throw std::invalid_argument("zeta_via_half: r must be >= 2");
  if (T < 1) throw std::invalid_argument("zeta_via_half: T must be >= 1");

  std::vector<std::vector<Rational>> h(r + 1);
  for (unsigned m = 1; m <= r; ++m) h[m] = harmonic_prefix(T, m);

  // 1/((1 - 2^{1-r}) r!)
  const Rational lead = (Rational(1) - Rational(2).pow(1 - static_cast<int>(r))).inverse() * inv_factorial(r);

  Rational total;
  Rational weight(1, 2);
  Rational last;
  std::vector<Rational> args(r);
  for (unsigned n = 1; n <= T; ++n) {
    weight *= Rational(1, 2);
    for (unsigned j = 1; j <= r; ++j) args[j - 1] = Rational(factorial(j - 1)) * h[j][n];
    last = weight * bell<Rational>(args);
    total += last;
  }
  return {(lead * total).to_double(), (lead * last).abs().to_double()};
}

}  // namespace bellforge
