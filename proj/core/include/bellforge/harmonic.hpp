#pragma once

#include <vector>

#include "bellforge/rational.hpp"

namespace bellforge {

/// H_n^{(m)} = sum_{k=1}^n 1/k^m; H_0^{(m)} = 0.
Rational harmonic(unsigned n, unsigned m);

/// H_n^{(m)}(x) = sum_{k=0}^{n-1} 1/(k+x)^m.
/// Throws PoleError when x + k = 0 for some 0 <= k < n.
Rational harmonic_shifted(unsigned n, unsigned m, const Rational& x);

/// H_0^{(m)}(x), ..., H_{n_max}^{(m)}(x) as prefix sums.
std::vector<Rational> harmonic_prefix(unsigned n_max, unsigned m, const Rational& x = 1);

/// Ascending factorial (x)_n = x(x+1)...(x+n-1); (x)_0 = 1.
Rational pochhammer(const Rational& x, unsigned n);

/// Sign pattern of the Bell arguments (j-1)! H^{(j)} that recurs throughout.
enum class HarmonicSigns {
  kAllPositive,        ///< 0!H^{(1)}, 1!H^{(2)}, 2!H^{(3)}, ...
  kPlusMinus,          ///< +0!H^{(1)}, -1!H^{(2)}, +2!H^{(3)}, ...  i.e. (-1)^{j-1}
  kMinusPlus,          ///< -0!H^{(1)}, +1!H^{(2)}, -2!H^{(3)}, ...  i.e. (-1)^j
};

/// Arguments x_j = sign_j (j-1)! H_n^{(j)}(x) for j = 1..r.
std::vector<Rational> harmonic_bell_args(unsigned n, unsigned r, const Rational& x, HarmonicSigns signs);

}  // namespace bellforge
