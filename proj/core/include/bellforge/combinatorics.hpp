#pragma once

#include <cstdint>

#include "bellforge/rational.hpp"

namespace bellforge {

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::uint64_t n, std::int64_t k);

/// n!
BigInt factorial(std::uint64_t n);

/// Converts an integral-valued rational; throws NonIntegerResult otherwise.
BigInt require_integer(const Rational& q, const char* what);

}  // namespace bellforge
