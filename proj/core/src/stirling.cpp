#include "bellforge/stirling.hpp"

#include <stdexcept>
#include <string>

#include "bellforge/bell.hpp"
#include "bellforge/combinatorics.hpp"
#include "bellforge/errors.hpp"
#include "bellforge/harmonic.hpp"

namespace bellforge {

namespace {

// Multiplies the coefficient vector of p(x) by (x - j) in place.
void times_x_minus(std::vector<BigInt>& c, unsigned j) {
  c.push_back(0);
  for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - BigInt(j) * c[k];
  c[0] = -BigInt(j) * c[0];
}

}  // namespace

StirlingRow stirling_row_oracle(unsigned n) {
  std::vector<BigInt> c{1};
  for (unsigned j = 0; j < n; ++j) times_x_minus(c, j);
  return {n, std::move(c)};
}

std::vector<StirlingRow> stirling_triangle(unsigned n_max) {
  std::vector<StirlingRow> rows;
  rows.reserve(n_max + 1);
  std::vector<BigInt> c{1};
  rows.push_back({0, c});
  for (unsigned n = 1; n <= n_max; ++n) {
    times_x_minus(c, n - 1);
    rows.push_back({n, c});
  }
  return rows;
}

BigInt stirling_via_bell(unsigned n, unsigned k) {
  if (n == 0 || k == 0 || k > n) {
    throw std::invalid_argument("stirling_via_bell: need n >= 1 and 1 <= k <= n");
  }
  const unsigned r = k - 1;
  const auto args = harmonic_bell_args(n - 1, r, 1, HarmonicSigns::kPlusMinus);
  const Rational y = bell<Rational>(args);
  const Rational scale = Rational(factorial(n - 1), factorial(r)) * Rational(minus_one_pow(n + r + 1));
  return require_integer(scale * y, "stirling_via_bell");
}

StirlingRow stirling_row_via_bell(unsigned n) {
  if (n == 0) throw std::invalid_argument("stirling_row_via_bell: n must be >= 1");
  StirlingRow row{n, std::vector<BigInt>(n + 1)};
  for (unsigned k = 1; k <= n; ++k) row.entries[k] = stirling_via_bell(n, k);
  return row;
}

StirlingRow shen_recurrence_row(unsigned n) {
  if (n == 0) throw std::invalid_argument("shen_recurrence_row: n must be >= 1");
  std::vector<Rational> h(n);  // h[m] = H_{n-1}^{(m)}, m = 1..n-1
  for (unsigned m = 1; m < n; ++m) h[m] = harmonic(n - 1, m);
  std::vector<Rational> s(n + 1);
  s[1] = Rational(factorial(n - 1)) * Rational(minus_one_pow(n + 1));
  for (unsigned r = 0; r + 2 <= n; ++r) {
    Rational acc;
    for (unsigned k = 0; k <= r; ++k) acc += s[r - k + 1] * h[k + 1];
    s[r + 2] = -acc / Rational(r + 1);
  }
  StirlingRow row{n, std::vector<BigInt>(n + 1)};
  for (unsigned k = 0; k <= n; ++k) row.entries[k] = require_integer(s[k], "shen_recurrence_row");
  return row;
}

BigInt stirling_closed_form(unsigned n, unsigned k) {
  if (k > 4) throw std::invalid_argument("stirling_closed_form: k must be <= 4");
  if (k == 0) return n == 0 ? 1 : 0;
  if (n == 0) throw std::invalid_argument("stirling_closed_form: n must be >= 1 for k >= 1");
  const Rational f = Rational(factorial(n - 1));
  const Rational h1 = harmonic(n - 1, 1);
  const Rational h2 = harmonic(n - 1, 2);
  const Rational h3 = harmonic(n - 1, 3);
  Rational v;
  switch (k) {
    case 1:
      v = Rational(minus_one_pow(n + 1)) * f;
      break;
    case 2:
      v = Rational(minus_one_pow(n)) * f * h1;
      break;
    case 3:
      v = Rational(minus_one_pow(n + 1)) * f / Rational(2) * (h1 * h1 - h2);
      break;
    default:
      v = Rational(minus_one_pow(n)) * f / Rational(6) * (h1 * h1 * h1 - Rational(3) * h1 * h2 + Rational(2) * h3);
      break;
  }
  return require_integer(v, "stirling_closed_form");
}

RationalSeries cauchy_log_power(unsigned r, std::size_t N) {
  const auto rows = stirling_triangle(static_cast<unsigned>(N));
  const Rational rf = Rational(factorial(r));
  return series::generate<Rational>(N, [&](std::size_t n) {
    return rf * Rational(minus_one_pow(static_cast<std::int64_t>(n))) * Rational(rows[n].at(r)) /
           Rational(factorial(n));
  });
}

}  // namespace bellforge
