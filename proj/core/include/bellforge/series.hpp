#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bellforge/domain.hpp"
#include "bellforge/rational.hpp"

namespace bellforge {

/// Coefficients c_0..c_N of a formal power series truncated at order N.
template <CoefficientDomain T>
class TruncatedSeries {
 public:
  using value_type = T;

  /// Throws std::invalid_argument for an empty coefficient vector.
  explicit TruncatedSeries(std::vector<T> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  }

  static TruncatedSeries zero(std::size_t order) { return TruncatedSeries(std::vector<T>(order + 1)); }

  static TruncatedSeries one(std::size_t order) {
    std::vector<T> c(order + 1);
    c[0] = domain_value<T>(1);
    return TruncatedSeries(std::move(c));
  }

  std::size_t order() const { return c_.size() - 1; }
  const T& operator[](std::size_t i) const { return c_.at(i); }
  std::span<const T> coefficients() const { return c_; }

  TruncatedSeries truncated(std::size_t order) const {
    require_order(order, "truncated");
    return TruncatedSeries(std::vector<T>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
  }

  void require_order(std::size_t N, const char* op) const {
    if (N > order()) {
      throw std::out_of_range(std::string(op) + ": order " + std::to_string(N) +
                              " exceeds series order " + std::to_string(order()));
    }
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<T> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c[i] = a.c_[i] + b.c_[i];
    return TruncatedSeries(std::move(c));
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<T> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c[i] = a.c_[i] - b.c_[i];
    return TruncatedSeries(std::move(c));
  }

  friend TruncatedSeries operator*(const T& s, const TruncatedSeries& a) {
    std::vector<T> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.c_[i];
    return TruncatedSeries(std::move(c));
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<T> c_;
};

using RationalSeries = TruncatedSeries<Rational>;
using FloatSeries = TruncatedSeries<double>;

namespace series {

/// Cauchy product truncated at order N.
template <CoefficientDomain T>
TruncatedSeries<T> mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b, std::size_t N) {
  a.require_order(N, "mul");
  b.require_order(N, "mul");
  std::vector<T> c(N + 1);
  for (std::size_t i = 0; i <= N; ++i) {
    T acc{};
    for (std::size_t j = 0; j <= i; ++j) acc = acc + a[j] * b[i - j];
    c[i] = std::move(acc);
  }
  return TruncatedSeries<T>(std::move(c));
}

/// Solves r a_r = sum_{m=1}^r a_{r-m} b_m with a_0 = 1.
///
/// `b` holds the log-derivative coefficients: index m is b_m where
/// log h = b_0 + sum_m b_m x^m / m. The constant b_0 is the caller's
/// prefactor, so b[0] must be zero here.
template <CoefficientDomain T>
TruncatedSeries<T> exp_recurrence(const TruncatedSeries<T>& b, std::size_t N) {
  b.require_order(N, "exp_recurrence");
  if (!(b[0] == T{})) throw std::invalid_argument("exp_recurrence: b_0 must be carried outside (nonzero b[0])");
  std::vector<T> a(N + 1);
  a[0] = domain_value<T>(1);
  for (std::size_t r = 1; r <= N; ++r) {
    T acc{};
    for (std::size_t m = 1; m <= r; ++m) acc = acc + a[r - m] * b[m];
    a[r] = domain_value<T>(Rational(1, static_cast<long>(r))) * acc;
  }
  return TruncatedSeries<T>(std::move(a));
}

/// Inverse of exp_recurrence: returns b (with b[0] = 0) such that
/// exp_recurrence(b, N) reproduces `a`. Requires a[0] = 1.
template <CoefficientDomain T>
TruncatedSeries<T> log_recurrence(const TruncatedSeries<T>& a, std::size_t N) {
  a.require_order(N, "log_recurrence");
  if (a[0] == T{}) throw std::domain_error("log_recurrence: constant term 0 (log singularity)");
  if (!(a[0] == domain_value<T>(1))) throw std::invalid_argument("log_recurrence: constant term must be 1");
  std::vector<T> b(N + 1);
  for (std::size_t r = 1; r <= N; ++r) {
    T acc = domain_value<T>(Rational(static_cast<long>(r))) * a[r];
    for (std::size_t m = 1; m < r; ++m) acc = acc - a[r - m] * b[m];
    b[r] = std::move(acc);
  }
  return TruncatedSeries<T>(std::move(b));
}

/// exp(f) for a plain series f with f_0 = 0.
template <CoefficientDomain T>
TruncatedSeries<T> exp(const TruncatedSeries<T>& f, std::size_t N) {
  f.require_order(N, "exp");
  std::vector<T> b(N + 1);
  for (std::size_t m = 1; m <= N; ++m) b[m] = domain_value<T>(Rational(static_cast<long>(m))) * f[m];
  if (!(f[0] == T{})) throw std::invalid_argument("exp: constant term must be zero");
  return exp_recurrence(TruncatedSeries<T>(std::move(b)), N);
}

/// log(a) as a plain series (constant term 0). Requires a_0 = 1.
template <CoefficientDomain T>
TruncatedSeries<T> log(const TruncatedSeries<T>& a, std::size_t N) {
  auto b = log_recurrence(a, N);
  std::vector<T> f(N + 1);
  for (std::size_t m = 1; m <= N; ++m) f[m] = domain_value<T>(Rational(1, static_cast<long>(m))) * b[m];
  return TruncatedSeries<T>(std::move(f));
}

/// a^alpha = exp(alpha log a). Requires a_0 = 1.
template <CoefficientDomain T>
TruncatedSeries<T> pow(const TruncatedSeries<T>& a, const Rational& alpha, std::size_t N) {
  a.require_order(N, "pow");
  if (a[0] == T{}) throw std::domain_error("pow: constant term 0");
  if (alpha.is_zero()) return TruncatedSeries<T>::one(N);
  auto b = log_recurrence(a, N);
  return exp_recurrence(domain_value<T>(alpha) * b, N);
}

template <CoefficientDomain T>
TruncatedSeries<T> reciprocal(const TruncatedSeries<T>& a, std::size_t N) {
  return pow(a, Rational(-1), N);
}

/// outer(inner(z)) truncated at N, by Horner's scheme over truncated series.
template <CoefficientDomain T>
TruncatedSeries<T> compose(const TruncatedSeries<T>& outer, const TruncatedSeries<T>& inner, std::size_t N) {
  outer.require_order(N, "compose");
  inner.require_order(N, "compose");
  if (!(inner[0] == T{})) throw std::invalid_argument("compose: inner constant term must be zero");
  const auto inner_n = inner.truncated(N);
  std::vector<T> acc(N + 1);
  acc[0] = outer[N];
  TruncatedSeries<T> result(std::move(acc));
  for (std::size_t k = N; k-- > 0;) {
    result = mul(result, inner_n, N);
    std::vector<T> c(result.coefficients().begin(), result.coefficients().end());
    c[0] = c[0] + outer[k];
    result = TruncatedSeries<T>(std::move(c));
  }
  return result;
}

/// Horner evaluation of the truncated polynomial.
inline double evaluate(const FloatSeries& s, double x) {
  double acc = 0.0;
  for (std::size_t k = s.order() + 1; k-- > 0;) acc = acc * x + s[k];
  return acc;
}

/// Builds a series from an index -> coefficient function.
template <CoefficientDomain T, class F>
TruncatedSeries<T> generate(std::size_t N, F&& coefficient) {
  std::vector<T> c;
  c.reserve(N + 1);
  for (std::size_t n = 0; n <= N; ++n) c.push_back(coefficient(n));
  return TruncatedSeries<T>(std::move(c));
}

/// 1/(1 - z) = sum z^n.
RationalSeries geometric(std::size_t N);
/// log(1 - z) = -sum_{n>=1} z^n / n.
RationalSeries log_one_minus(std::size_t N);
/// Li_s(z) = sum_{n>=1} z^n / n^s.
RationalSeries polylog(unsigned s, std::size_t N);
/// 1 + c z.
RationalSeries linear(const Rational& c, std::size_t N);

FloatSeries to_float(const RationalSeries& s);

}  // namespace series
}  // namespace bellforge
