#include "bellforge/bernoulli.hpp"

#include <stdexcept>
#include <string>

#include "bellforge/bell.hpp"
#include "bellforge/combinatorics.hpp"
#include "bellforge/series.hpp"

namespace bellforge {

namespace {

Rational fact(std::size_t n) { return Rational(factorial(n)); }

Rational binom(std::size_t n, std::size_t k) { return Rational(binomial(n, static_cast<std::int64_t>(k))); }

}  // namespace

ExpTransform exp_transform(const Rational& b0, std::span<const Rational> b) {
  std::vector<Rational> args(b.size());
  for (std::size_t m = 1; m <= b.size(); ++m) args[m - 1] = fact(m - 1) * b[m - 1];
  const auto y = bell_recurrence<Rational>(args);
  ExpTransform out{b0, {}};
  out.coefficients.reserve(y.size());
  for (std::size_t r = 0; r < y.size(); ++r) out.coefficients.push_back(y[r] / fact(r));
  return out;
}

BernoulliTable bernoulli(std::size_t N) {
  std::vector<Rational> B{Rational(1)};
  if (N >= 1) B.push_back(Rational(-1, 2));
  // r = 0 is the identity B_1 = B_1; from r = 1 on the k = r term carries
  // (-1)^r B_{r+1}/(r+1), and 1 - (-1)^r/(r+1) is never zero.
  for (std::size_t r = 1; r + 1 <= N; ++r) {
    Rational rhs;
    for (std::size_t k = 0; k < r; ++k) {
      rhs += Rational(minus_one_pow(static_cast<std::int64_t>(k))) * binom(r, k) * B[r - k] * B[k + 1] /
             Rational(static_cast<long>(k + 1));
    }
    const Rational factor =
        Rational(1) - Rational(minus_one_pow(static_cast<std::int64_t>(r))) / Rational(static_cast<long>(r + 1));
    B.push_back(rhs / factor);
  }
  return {std::move(B)};
}

BernoulliTable bernoulli_reciprocal_oracle(std::size_t N) {
  // (e^t - 1)/t = sum t^n/(n+1)!
  const RationalSeries s = series::generate<Rational>(N, [](std::size_t n) { return fact(n + 1).inverse(); });
  const RationalSeries inv = series::reciprocal(s, N);
  std::vector<Rational> B;
  B.reserve(N + 1);
  for (std::size_t n = 0; n <= N; ++n) B.push_back(inv[n] * fact(n));
  return {std::move(B)};
}

BernoulliTable bernoulli_defining_sum_oracle(std::size_t N) {
  std::vector<Rational> B{Rational(1)};
  for (std::size_t n = 1; n <= N; ++n) {
    Rational acc;
    for (std::size_t k = 0; k < n; ++k) acc += binom(n + 1, k) * B[k];
    B.push_back(-acc / Rational(static_cast<long>(n + 1)));
  }
  return {std::move(B)};
}

IdentityReport ramanujan_log_check(std::size_t N) {
  if (N < 2) throw std::invalid_argument("ramanujan_log_check: N must be >= 2");
  const BernoulliTable B = bernoulli(N);
  const RationalSeries h = series::generate<Rational>(N, [&](std::size_t n) { return B[n] / fact(n); });
  const RationalSeries rhs = series::generate<Rational>(N, [&](std::size_t n) {
    if (n == 0) return Rational(0);
    return Rational(minus_one_pow(static_cast<std::int64_t>(n) + 1)) * B[n] /
           (Rational(static_cast<long>(n)) * fact(n));
  });
  return exact_report("ramanujan-log-series", {{"N", std::to_string(N)}}, series::log(h, N), rhs);
}

std::vector<IdentityReport> bernoulli_bell_check(std::size_t n_max) {
  const BernoulliTable B = bernoulli(n_max);
  std::vector<Rational> args;
  for (std::size_t m = 1; m <= n_max; ++m) {
    args.push_back(Rational(minus_one_pow(static_cast<std::int64_t>(m) + 1)) * B[m] / Rational(static_cast<long>(m)));
  }
  const auto y = bell_recurrence<Rational>(args);
  std::vector<IdentityReport> out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    out.push_back(exact_report("bernoulli-bell", {{"n", std::to_string(n)}}, B[n], y[n]));
  }
  return out;
}

std::vector<IdentityReport> bernoulli_recurrence_check(std::size_t r_max) {
  const BernoulliTable B = bernoulli(r_max + 1);
  std::vector<IdentityReport> out;
  for (std::size_t r = 0; r <= r_max; ++r) {
    Rational rhs;
    for (std::size_t k = 0; k <= r; ++k) {
      rhs += Rational(minus_one_pow(static_cast<std::int64_t>(k))) * binom(r, k) * B[r - k] * B[k + 1] /
             Rational(static_cast<long>(k + 1));
    }
    out.push_back(exact_report("bernoulli-quadratic-recurrence", {{"r", std::to_string(r)}}, B[r + 1], rhs));
  }
  return out;
}

std::vector<IdentityReport> bernoulli_zeta_identity(unsigned n) {
  if (n < 1) throw std::invalid_argument("bernoulli_zeta_identity: n must be >= 1");
  const BernoulliTable B = bernoulli(2 * n);
  const Params params{{"n", std::to_string(n)}};

  Rational scaled;
  Rational plain;
  for (unsigned k = 1; k <= n; ++k) {
    const Rational p2k = Rational(2).pow(static_cast<int>(2 * k));
    scaled += binom(2 * n, 2 * k) * p2k * B[2 * k] / Rational(2 * n - 2 * k + 1);
    plain += p2k * B[2 * k] / (fact(2 * n - 2 * k + 1) * fact(2 * k));
  }
  const Rational lhs_plain = fact(2 * n) / (fact(2 * n - 1) * fact(2 * n + 1));
  const Rational lhs_scaled = fact(2 * n) * lhs_plain;

  return {exact_report("bernoulli-even-sum", params, lhs_plain, plain),
          exact_report("bernoulli-even-binomial-sum", params, lhs_scaled, scaled)};
}

}  // namespace bellforge
