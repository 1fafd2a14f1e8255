#pragma once

#include <cstddef>
#include <vector>

#include "bellforge/identity_report.hpp"
#include "bellforge/rational.hpp"

namespace bellforge {

/// q_1..q_N with zeta(2n) = q_n pi^{2n}.
struct ZetaEvenTable {
  std::vector<Rational> q;  // q[0] is q_1

  /// q_n for n >= 1.
  const Rational& at(std::size_t n) const { return q.at(n - 1); }
  std::size_t size() const { return q.size(); }
};

/// Solves 2n/(2n+1)! = 2 sum_{k=1}^n (-1)^{k+1} q_k / (2n-2k+1)! for q_n in turn.
/// This is the coefficient comparison of log(sin(pi x)/(pi x)) with its Maclaurin series.
ZetaEvenTable zeta_even_rational(std::size_t N);

/// q_n = (-1)^{n+1} 2^{2n} B_{2n} / (2 (2n)!), n = 1..n_max.
std::vector<IdentityReport> zeta_even_bernoulli_check(std::size_t n_max);

/// The sin-product expansion carried over polynomials in P = pi^2, with
/// b_{2k} = 2 q_k P^k and b_odd = 0:
///   Y_{2n+1}(-b_1, -1!b_2, ...) = 0
///   Y_{2n}(-b_1, -1!b_2, ...)   = (-1)^n (2n)!/(2n+1)! P^n
/// for n = 0..n_max, plus the n = 2 instance P^2/60 = zeta(2)^2 - zeta(4).
std::vector<IdentityReport> sin_product_check(std::size_t n_max);

}  // namespace bellforge
