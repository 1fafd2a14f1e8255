#include "bellforge/harmonic.hpp"

#include "bellforge/combinatorics.hpp"
#include "bellforge/errors.hpp"

namespace bellforge {

Rational harmonic(unsigned n, unsigned m) { return harmonic_shifted(n, m, 1); }

Rational harmonic_shifted(unsigned n, unsigned m, const Rational& x) {
  Rational sum;
  for (unsigned k = 0; k < n; ++k) {
    const Rational d = x + Rational(k);
    if (d.is_zero()) {
      throw PoleError("harmonic_shifted: x + " + std::to_string(k) + " = 0 for x = " + x.str());
    }
    sum += d.pow(-static_cast<int>(m));
  }
  return sum;
}

std::vector<Rational> harmonic_prefix(unsigned n_max, unsigned m, const Rational& x) {
  std::vector<Rational> h(n_max + 1);
  for (unsigned k = 0; k < n_max; ++k) {
    const Rational d = x + Rational(k);
    if (d.is_zero()) throw PoleError("harmonic_prefix: pole at k = " + std::to_string(k));
    h[k + 1] = h[k] + d.pow(-static_cast<int>(m));
  }
  return h;
}

Rational pochhammer(const Rational& x, unsigned n) {
  Rational p = 1;
  for (unsigned k = 0; k < n; ++k) p *= x + Rational(k);
  return p;
}

std::vector<Rational> harmonic_bell_args(unsigned n, unsigned r, const Rational& x, HarmonicSigns signs) {
  std::vector<Rational> args;
  args.reserve(r);
  for (unsigned j = 1; j <= r; ++j) {
    Rational v = Rational(factorial(j - 1)) * harmonic_shifted(n, j, x);
    const bool negate = (signs == HarmonicSigns::kPlusMinus && j % 2 == 0) ||
                        (signs == HarmonicSigns::kMinusPlus && j % 2 == 1);
    args.push_back(negate ? -v : v);
  }
  return args;
}

}  // namespace bellforge
