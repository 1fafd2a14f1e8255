#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bellforge/identity_report.hpp"
#include "bellforge/rational.hpp"

namespace bellforge {

/// Result of exponentiating log h = b_0 + sum_m b_m x^m / m.
///
/// e^{b_0} is generally irrational, so it is handed back as the exponent
/// rather than folded into the coefficients.
struct ExpTransform {
  Rational prefactor_exponent;
  /// a_r = Y_r(b_1, 1!b_2, ..., (r-1)!b_r) / r!, r = 0..N
  std::vector<Rational> coefficients;
};

/// Computes a_0..a_N for b = (b_1, ..., b_N) through complete Bell polynomials.
ExpTransform exp_transform(const Rational& b0, std::span<const Rational> b);

/// B_0..B_N in the t/(e^t - 1) convention (B_1 = -1/2).
struct BernoulliTable {
  std::vector<Rational> values;

  const Rational& operator[](std::size_t n) const { return values.at(n); }
  std::size_t size() const { return values.size(); }
};

/// Table built from the quadratic recurrence
///   B_{r+1} = sum_{k=0}^r (-1)^k C(r,k) B_{r-k} B_{k+1} / (k+1),
/// with the B_{r+1} term on the right moved across. Seeded by B_0, B_1.
BernoulliTable bernoulli(std::size_t N);

/// Oracle: n! times the coefficients of the reciprocal of sum_n t^n/(n+1)!.
BernoulliTable bernoulli_reciprocal_oracle(std::size_t N);

/// Oracle: B_n = -1/(n+1) sum_{k<n} C(n+1,k) B_k.
BernoulliTable bernoulli_defining_sum_oracle(std::size_t N);

/// log(x/(e^x - 1)) = sum_{n>=1} (-1)^{n+1} B_n x^n / (n n!), with the left side
/// computed by series::log of sum B_n x^n/n!. Requires N >= 2.
IdentityReport ramanujan_log_check(std::size_t N);

/// B_n = Y_n(B_1/1, -B_2/2, ..., (-1)^{n+1} B_n/n) for n = 0..n_max.
std::vector<IdentityReport> bernoulli_bell_check(std::size_t n_max);

/// The quadratic recurrence evaluated with the finished table, r = 0..r_max.
/// At r = 0 it reduces to B_1 = B_1.
std::vector<IdentityReport> bernoulli_recurrence_check(std::size_t r_max);

/// [(2n)!]^2 / ((2n-1)!(2n+1)!) = sum_{k=1}^n C(2n,2k) 2^{2k} B_{2k} / (2n-2k+1),
/// and the unscaled form with (2n-2k+1)!(2k)! in the denominator. Requires n >= 1.
std::vector<IdentityReport> bernoulli_zeta_identity(unsigned n);

}  // namespace bellforge
