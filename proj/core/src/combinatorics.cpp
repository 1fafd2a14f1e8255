#include "bellforge/combinatorics.hpp"

#include <string>

#include "bellforge/errors.hpp"

namespace bellforge {

BigInt binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt require_integer(const Rational& q, const char* what) {
  if (!q.is_integer()) {
    throw NonIntegerResult(std::string(what) + " produced non-integer " + q.str());
  }
  return q.numerator();
}

}  // namespace bellforge
