#include "bellforge/gamma.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bellforge/bell.hpp"
#include "bellforge/bernoulli.hpp"
#include "bellforge/series.hpp"

namespace bellforge {

namespace {

constexpr double kLogTwoPi = 1.8378770664093454835606594728112;

const std::vector<double>& stirling_coefficients() {
  // B_{2k} / (2k (2k-1)), k = 1..8
  static const std::vector<double> c = [] {
    const BernoulliTable B = bernoulli(16);
    std::vector<double> out;
    for (unsigned k = 1; k <= 8; ++k) out.push_back((B[2 * k] / Rational(2 * k * (2 * k - 1))).to_double());
    return out;
  }();
  return c;
}

IdentityReport sign_report(std::string identity, unsigned m, double value) {
  IdentityReport r;
  r.identity = std::move(identity);
  r.params = {{"m", std::to_string(m)}};
  r.lhs = render(value);
  r.rhs = m % 2 == 0 ? "> 0" : "< 0";
  r.passed = m % 2 == 0 ? value > 0.0 : value < 0.0;
  return r;
}

std::string render_x(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

}  // namespace

double gamma_deriv_at_one(unsigned m, const ZetaConstants& constants) {
  if (m < 1 || m > constants.max_m()) throw std::out_of_range("gamma_deriv_at_one: m out of range");
  std::vector<double> args(m);
  double fact = 1.0;  // (j-1)!
  for (unsigned j = 1; j <= m; ++j) {
    if (j > 1) fact *= j - 1;
    args[j - 1] = (j % 2 == 0 ? 1.0 : -1.0) * fact * constants.zeta(j);
  }
  return bell<double>(args);
}

QuadratureResult gamma_deriv_quadrature(unsigned m) {
  if (m > 10) throw std::out_of_range("gamma_deriv_quadrature: m must be <= 10");
  const double md = m;
  const auto lower = [md](double u) { return std::exp(-u - std::exp(-u)) * std::pow(-u, md); };
  const auto upper = [md](double t) { return std::exp(-t) * std::pow(std::log(t), md); };

  const double u_max = decay_cutoff([md](double u) { return std::exp(-u) * std::pow(u, md); });
  const double t_max = decay_cutoff([md](double t) { return std::exp(-t) * std::pow(std::log(t), md); }, 2.0);

  const QuadratureResult lo = integrate(lower, 0.0, u_max);
  const QuadratureResult hi = integrate(upper, 1.0, t_max);
  return {lo.value + hi.value, lo.error_estimate + hi.error_estimate, lo.evaluations + hi.evaluations};
}

double gamma_reference(double z) {
  if (!(z > 0.0)) throw std::domain_error("gamma_reference: z must be positive");
  double w = z;
  double log_divisor = 0.0;
  while (w < 20.0) {
    log_divisor += std::log(w);
    w += 1.0;
  }
  double series = 0.0;
  const double w2 = w * w;
  double wp = w;
  for (double c : stirling_coefficients()) {
    series += c / wp;
    wp *= w2;
  }
  const double log_gamma = (w - 0.5) * std::log(w) - w + 0.5 * kLogTwoPi + series;
  return std::exp(log_gamma - log_divisor);
}

std::vector<IdentityReport> gamma_deriv_check(unsigned m_quad, unsigned m_sign, const ZetaConstants& constants) {
  std::vector<IdentityReport> out;
  for (unsigned m = 1; m <= m_quad; ++m) {
    const Params p{{"m", std::to_string(m)}};
    try {
      out.push_back(float_report("gamma-derivative-at-one", p, gamma_deriv_at_one(m, constants),
                                 gamma_deriv_quadrature(m).value, 1e-8));
    } catch (const std::exception& e) {
      out.push_back(error_report("gamma-derivative-at-one", p, e.what()));
    }
  }
  for (unsigned m = 1; m <= m_sign; ++m) {
    out.push_back(sign_report("gamma-derivative-sign", m, gamma_deriv_at_one(m, constants)));
  }
  const double g = constants.euler_gamma();
  out.push_back(float_report("gamma-second-derivative", {}, gamma_deriv_quadrature(2).value,
                             g * g + constants.zeta(2), 1e-8));
  return out;
}

std::vector<IdentityReport> gamma_series_check(std::size_t N, const ZetaConstants& constants) {
  if (N < 2 || N > constants.max_m()) throw std::out_of_range("gamma_series_check: N out of range");
  // log Gamma(1+x) = -gamma x + sum_{k>=2} (-1)^k zeta(k) x^k / k
  const FloatSeries b = series::generate<double>(N, [&](std::size_t m) {
    if (m == 0) return 0.0;
    return (m % 2 == 0 ? 1.0 : -1.0) * constants.zeta(static_cast<unsigned>(m));
  });
  const FloatSeries gamma_series = series::exp_recurrence(b, N);
  const FloatSeries reciprocal = series::exp_recurrence(-1.0 * b, N);

  std::vector<IdentityReport> out;
  for (double x : {0.1, 0.25, -0.25}) {
    const Params p{{"x", render_x(x)}, {"N", std::to_string(N)}};
    const double ref = gamma_reference(1.0 + x);
    out.push_back(float_report("gamma-maclaurin", p, series::evaluate(gamma_series, x), ref, 1e-8));
    out.push_back(float_report("reciprocal-gamma-maclaurin", p, series::evaluate(reciprocal, x), 1.0 / ref, 1e-8));
  }
  return out;
}

double log_barnes_g_product(double x, const ZetaConstants& constants) {
  if (!(std::fabs(x) < 1.0)) throw std::domain_error("log_barnes_g_product: |x| must be < 1");
  constexpr unsigned long K = 2000;
  constexpr int kOrders = 12;
  const double g = constants.euler_gamma();
  double sum = 0.0;
  for (unsigned long k = K; k >= 1; --k) {
    const double kd = static_cast<double>(k);
    const double y = x / kd;
    double s;
    if (std::fabs(y) < 1e-2) {
      // k log(1+y) - x + x y / 2 = k sum_{j>=3} (-1)^{j+1} y^j / j
      s = 0.0;
      double yp = y * y * y;
      for (int j = 3; j < 3 + kOrders; ++j) {
        s += (j % 2 == 1 ? 1.0 : -1.0) * yp / j;
        yp *= y;
      }
      s *= kd;
    } else {
      s = kd * std::log1p(y) - x + x * y / 2.0;
    }
    sum += s;
  }
  // sum_{k>K} k^{1-j} through Euler-Maclaurin, for the x^j terms j >= 3
  const double kd = static_cast<double>(K);
  double tail = 0.0;
  double xp = x * x * x;
  for (int j = 3; j < 3 + kOrders; ++j) {
    const double s = j - 1;
    const double t = std::pow(kd, 1.0 - s) / (s - 1.0) - std::pow(kd, -s) / 2.0 + s * std::pow(kd, -s - 1.0) / 12.0;
    tail += (j % 2 == 1 ? 1.0 : -1.0) * xp / j * t;
    xp *= x;
  }
  return 0.5 * x * kLogTwoPi - 0.5 * (g * x * x + x * x + x) + sum + tail;
}

std::vector<IdentityReport> barnes_g_check(std::size_t N, const ZetaConstants& constants) {
  if (N < 3 || N > constants.max_m() + 1) throw std::out_of_range("barnes_g_check: N out of range");
  const double c1 = 0.5 * (kLogTwoPi - 1.0);
  std::vector<double> c(N + 1, 0.0);
  c[1] = c1;
  c[2] = 1.0 + constants.euler_gamma();
  for (std::size_t n = 3; n <= N; ++n) c[n] = constants.zeta(static_cast<unsigned>(n - 1));

  // Y_m(-c_1, 1!c_2, ..., (-1)^m (m-1)! c_m) = m-th derivative of 1/G(1+x) at 0
  std::vector<double> args(N);
  double fact = 1.0;
  for (std::size_t j = 1; j <= N; ++j) {
    if (j > 1) fact *= static_cast<double>(j - 1);
    args[j - 1] = (j % 2 == 0 ? 1.0 : -1.0) * fact * c[j];
  }
  const std::vector<double> d = bell_recurrence<double>(args);

  std::vector<IdentityReport> out;
  const double target = c1;
  out.push_back(float_report("barnes-g-prime-one-series", {}, -d[1], target, 1e-12));

  // Central differences of log G(1+x) at 0, Richardson-extrapolated over h, h/2, h/4, h/8.
  {
    constexpr int kLevels = 4;
    double table[kLevels][kLevels];
    double h = 0.04;
    for (int i = 0; i < kLevels; ++i, h /= 2.0) {
      table[i][0] = (log_barnes_g_product(h, constants) - log_barnes_g_product(-h, constants)) / (2.0 * h);
      double factor = 4.0;
      for (int j = 1; j <= i; ++j, factor *= 4.0) {
        table[i][j] = table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
      }
    }
    // G(1) = 1, so (log G)'(0) = G'(1).
    out.push_back(float_report("barnes-g-prime-one-product", {}, table[kLevels - 1][kLevels - 1], target, 1e-12));
  }

  for (unsigned m = 1; m <= 8 && m <= N; ++m) out.push_back(sign_report("barnes-g-derivative-sign", m, d[m]));

  FloatSeries coeffs = series::generate<double>(N, [&](std::size_t n) {
    double f = 1.0;
    for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
    return d[n] / f;
  });
  for (double x : {0.1, 0.25, -0.25}) {
    out.push_back(float_report("reciprocal-barnes-g", {{"x", render_x(x)}, {"N", std::to_string(N)}},
                               series::evaluate(coeffs, x), std::exp(-log_barnes_g_product(x, constants)), 1e-8));
  }
  return out;
}

}  // namespace bellforge
