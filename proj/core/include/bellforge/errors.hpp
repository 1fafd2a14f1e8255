#pragma once

#include <stdexcept>
#include <string>

namespace bellforge {

/// A summand or factor would divide by zero (e.g. x + k = 0 for some k in range).
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quantity that must be an integer came out with a non-unit denominator.
/// Always indicates a bug in the route that produced it.
class NonIntegerResult : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Quadrature did not reach its tolerance within the evaluation budget.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bellforge
