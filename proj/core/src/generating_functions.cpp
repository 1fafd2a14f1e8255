#include "bellforge/generating_functions.hpp"

#include <stdexcept>
#include <string>

#include "bellforge/bell.hpp"
#include "bellforge/combinatorics.hpp"
#include "bellforge/harmonic.hpp"
#include "bellforge/series.hpp"
#include "bellforge/stirling.hpp"

namespace bellforge {

std::vector<IdentityReport> section2_report(const Rational& x, std::size_t N) {
  if (x.sign() <= 0) throw std::invalid_argument("section2_report: x must be positive");
  if (N < 4) throw std::invalid_argument("section2_report: N must be >= 4");

  const Params params{{"x", x.str()}, {"N", std::to_string(N)}};
  const auto n_max = static_cast<unsigned>(N);
  const auto fact = [](std::size_t n) { return Rational(factorial(n)); };

  const RationalSeries binom_x = series::pow(series::linear(-1, N), -x, N);
  const RationalSeries geometric = series::geometric(N);
  const RationalSeries log1 = cauchy_log_power(1, N);
  const RationalSeries log2 = cauchy_log_power(2, N);
  const RationalSeries log3 = cauchy_log_power(3, N);

  const auto h1x = harmonic_prefix(n_max, 1, x);
  const auto h2x = harmonic_prefix(n_max, 2, x);
  const auto h1 = harmonic_prefix(n_max, 1);
  const auto h2 = harmonic_prefix(n_max, 2);

  std::vector<IdentityReport> out;

  out.push_back(exact_report("binomial-series", params, binom_x,
                             series::generate<Rational>(N, [&](std::size_t n) {
                               return pochhammer(x, static_cast<unsigned>(n)) / fact(n);
                             })));

  out.push_back(exact_report("log-binomial-series", params, series::mul(-Rational(1) * log1, binom_x, N),
                             series::generate<Rational>(N, [&](std::size_t n) {
                               return pochhammer(x, static_cast<unsigned>(n)) * h1x[n] / fact(n);
                             })));

  for (unsigned r = 2; r <= 3; ++r) {
    const RationalSeries logr = cauchy_log_power(r, N);
    const RationalSeries lhs = series::mul(Rational(minus_one_pow(r)) * logr, binom_x, N);
    const RationalSeries rhs = series::generate<Rational>(N, [&](std::size_t n) {
      const auto args = harmonic_bell_args(static_cast<unsigned>(n), r, x, HarmonicSigns::kPlusMinus);
      return pochhammer(x, static_cast<unsigned>(n)) * bell<Rational>(args) / fact(n);
    });
    Params p = params;
    p["r"] = std::to_string(r);
    out.push_back(exact_report("log-power-binomial-series", std::move(p), lhs, rhs));
  }

  out.push_back(exact_report("harmonic-generating-function", params, series::mul(-Rational(1) * log1, geometric, N),
                             series::generate<Rational>(N, [&](std::size_t n) { return h1[n]; })));

  out.push_back(exact_report("log-squared-binomial-series", params, series::mul(log2, binom_x, N),
                             series::generate<Rational>(N, [&](std::size_t n) {
                               return pochhammer(x, static_cast<unsigned>(n)) * (h1x[n] * h1x[n] - h2x[n]) / fact(n);
                             })));

  out.push_back(exact_report("log-squared-geometric", params, series::mul(log2, geometric, N),
                             series::generate<Rational>(N, [&](std::size_t n) { return h1[n] * h1[n] - h2[n]; })));

  {
    const RationalSeries lhs = Rational(-1, 3) * log3;
    const RationalSeries li3 = series::polylog(3, N);
    const RationalSeries rhs = series::generate<Rational>(N, [&](std::size_t n) {
      if (n == 0) return Rational(0);
      const Rational nn(static_cast<long>(n));
      return (h1[n] * h1[n] - h2[n]) / nn - Rational(2) * h1[n] / (nn * nn) + Rational(2) * li3[n];
    });
    out.push_back(exact_report("log-cubed-harmonic-trilog", params, lhs, rhs));
  }

  {
    // Same cube expressed through H_{n-1}: log^3(1-z) = -3 sum ([H_{n-1}]^2 - H_{n-1}^{(2)}) z^n / n
    const RationalSeries rhs = series::generate<Rational>(N, [&](std::size_t n) {
      if (n == 0) return Rational(0);
      return Rational(-3) * (h1[n - 1] * h1[n - 1] - h2[n - 1]) / Rational(static_cast<long>(n));
    });
    out.push_back(exact_report("log-cubed-shifted-harmonic", params, log3, rhs));
  }
  return out;
}

std::vector<IdentityReport> cauchy_report(unsigned r_max, std::size_t N) {
  std::vector<IdentityReport> out;
  const RationalSeries log1 = series::log_one_minus(N);
  RationalSeries power = RationalSeries::one(N);
  for (unsigned r = 1; r <= r_max; ++r) {
    power = series::mul(power, log1, N);
    out.push_back(exact_report("cauchy-log-power", {{"r", std::to_string(r)}, {"N", std::to_string(N)}},
                               cauchy_log_power(r, N), power));
  }
  return out;
}

}  // namespace bellforge
