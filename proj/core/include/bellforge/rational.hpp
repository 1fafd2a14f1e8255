#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include <gmpxx.h>

namespace bellforge {

/// Arbitrary-precision signed integer.
using BigInt = mpz_class;

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// The value is kept in canonical form at all times: the denominator is
/// positive and shares no factor with the numerator, so two equal values
/// always have identical (numerator, denominator) pairs.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(to_big(value)) {}  // NOLINT

  Rational(const BigInt& value) : value_(value) {}  // NOLINT

  /// Throws std::domain_error when `denominator` is zero.
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Parses "p/q" or an integer literal "p" (optional leading '-').
  /// Throws std::invalid_argument on anything else, including q = 0.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Nearest-below binary64 value (GMP truncation semantics).
  double to_double() const { return value_.get_d(); }

  /// "p/q", or "p" when the denominator is one.
  std::string str() const { return value_.get_str(); }

  /// Throws std::domain_error for zero.
  Rational inverse() const;
  Rational abs() const;
  /// Integer power; negative exponents invert (zero base throws).
  Rational pow(int exponent) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  template <std::integral I>
  static BigInt to_big(I value) {
    if constexpr (std::is_signed_v<I>) {
      return BigInt(static_cast<long>(value));
    } else {
      return BigInt(static_cast<unsigned long>(value));
    }
  }

  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// (-1)^k as a small integer.
constexpr int minus_one_pow(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace bellforge
