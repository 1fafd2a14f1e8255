#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bellforge/rational.hpp"

namespace bellforge {

/// Polynomial in one formal symbol with exact rational coefficients.
///
/// Used as a coefficient domain when a transcendental constant has to be
/// carried symbolically (powers of pi^2 in the sin-product identities).
/// Trailing zero coefficients are always trimmed, so equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT
  explicit Polynomial(std::vector<Rational> coefficients);

  /// c * symbol^degree
  static Polynomial monomial(const Rational& c, std::size_t degree);

  const std::vector<Rational>& coefficients() const { return c_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// e.g. "1/3*P^2 - 1/2*P + 4" for symbol "P".
  std::string str(const std::string& symbol = "P") const;

 private:
  void trim();

  std::vector<Rational> c_;
};

}  // namespace bellforge
