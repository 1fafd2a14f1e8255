#include "bellforge/zeta_even.hpp"

#include <string>

#include "bellforge/bell.hpp"
#include "bellforge/bernoulli.hpp"
#include "bellforge/combinatorics.hpp"
#include "bellforge/polynomial.hpp"

namespace bellforge {

namespace {

Rational fact(std::size_t n) { return Rational(factorial(n)); }

IdentityReport poly_report(std::string identity, Params params, const Polynomial& lhs, const Polynomial& rhs) {
  IdentityReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  r.passed = lhs == rhs;
  return r;
}

}  // namespace

ZetaEvenTable zeta_even_rational(std::size_t N) {
  ZetaEvenTable t;
  for (std::size_t n = 1; n <= N; ++n) {
    Rational acc = Rational(static_cast<long>(2 * n)) / fact(2 * n + 1);
    for (std::size_t k = 1; k < n; ++k) {
      acc -= Rational(2 * minus_one_pow(static_cast<std::int64_t>(k) + 1)) * t.at(k) / fact(2 * n - 2 * k + 1);
    }
    t.q.push_back(Rational(minus_one_pow(static_cast<std::int64_t>(n) + 1), 2) * acc);
  }
  return t;
}

std::vector<IdentityReport> zeta_even_bernoulli_check(std::size_t n_max) {
  const ZetaEvenTable t = zeta_even_rational(n_max);
  const BernoulliTable B = bernoulli(2 * n_max);
  std::vector<IdentityReport> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Rational rhs = Rational(minus_one_pow(static_cast<std::int64_t>(n) + 1)) *
                         Rational(2).pow(static_cast<int>(2 * n)) * B[2 * n] / (Rational(2) * fact(2 * n));
    out.push_back(exact_report("zeta-even-bernoulli", {{"n", std::to_string(n)}}, t.at(n), rhs));
  }
  return out;
}

std::vector<IdentityReport> sin_product_check(std::size_t n_max) {
  const std::size_t order = 2 * n_max + 1;
  const ZetaEvenTable t = zeta_even_rational(n_max + 1);

  // x_m = -(m-1)! b_m with b_{2k} = 2 q_k P^k
  std::vector<Polynomial> args(order);
  for (std::size_t m = 2; m <= order; m += 2) {
    args[m - 1] = Polynomial::monomial(-fact(m - 1) * Rational(2) * t.at(m / 2), m / 2);
  }
  const auto y = bell_recurrence<Polynomial>(args);

  std::vector<IdentityReport> out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Params params{{"n", std::to_string(n)}};
    const Polynomial even = Polynomial::monomial(
        Rational(minus_one_pow(static_cast<std::int64_t>(n))) * fact(2 * n) / fact(2 * n + 1), n);
    out.push_back(poly_report("sin-product-even", params, y[2 * n], even));
    out.push_back(poly_report("sin-product-odd", params, y[2 * n + 1], Polynomial()));
  }

  if (n_max >= 1) {
    const Polynomial z2 = Polynomial::monomial(t.at(1), 1);
    const Polynomial z4 = Polynomial::monomial(t.at(2), 2);
    out.push_back(poly_report("sin-product-zeta4", {}, Polynomial::monomial(Rational(1, 60), 2), z2 * z2 - z4));
  }
  return out;
}

}  // namespace bellforge
