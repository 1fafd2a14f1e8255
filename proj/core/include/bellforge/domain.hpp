#pragma once

#include <cmath>
#include <concepts>

#include "bellforge/polynomial.hpp"
#include "bellforge/rational.hpp"

namespace bellforge {

/// How a coefficient type embeds the rationals. Specialized per domain.
template <class T>
struct DomainTraits;

template <>
struct DomainTraits<Rational> {
  static constexpr bool exact = true;
  static Rational from_rational(const Rational& q) { return q; }
};

template <>
struct DomainTraits<double> {
  static constexpr bool exact = false;
  static double from_rational(const Rational& q) { return q.to_double(); }
};

template <>
struct DomainTraits<Polynomial> {
  static constexpr bool exact = true;
  static Polynomial from_rational(const Rational& q) { return Polynomial(q); }
};

/// A commutative ring containing the rationals: everything the series and
/// Bell machinery needs (add, multiply, negate, scale by a rational).
template <class T>
concept CoefficientDomain = std::regular<T> && requires(const T& a, const T& b, const Rational& q) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { DomainTraits<T>::from_rational(q) } -> std::convertible_to<T>;
  { DomainTraits<T>::exact } -> std::convertible_to<bool>;
};

template <CoefficientDomain T>
T domain_value(const Rational& q) {
  return DomainTraits<T>::from_rational(q);
}

/// Exact equality for exact domains.
template <CoefficientDomain T>
  requires DomainTraits<T>::exact
bool domain_equal(const T& a, const T& b) {
  return a == b;
}

/// Float comparisons always take an explicit absolute tolerance.
inline bool domain_equal(double a, double b, double abs_tol) { return std::fabs(a - b) <= abs_tol; }

}  // namespace bellforge
