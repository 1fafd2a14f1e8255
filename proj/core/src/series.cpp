#include "bellforge/series.hpp"

namespace bellforge::series {

RationalSeries geometric(std::size_t N) {
  return generate<Rational>(N, [](std::size_t) { return Rational(1); });
}

RationalSeries log_one_minus(std::size_t N) {
  return generate<Rational>(N, [](std::size_t n) {
    return n == 0 ? Rational(0) : Rational(-1, static_cast<long>(n));
  });
}

RationalSeries polylog(unsigned s, std::size_t N) {
  return generate<Rational>(N, [s](std::size_t n) {
    return n == 0 ? Rational(0) : Rational(static_cast<long>(n)).pow(-static_cast<int>(s));
  });
}

RationalSeries linear(const Rational& c, std::size_t N) {
  return generate<Rational>(N, [&c](std::size_t n) {
    return n == 0 ? Rational(1) : (n == 1 ? c : Rational(0));
  });
}

FloatSeries to_float(const RationalSeries& s) {
  return generate<double>(s.order(), [&s](std::size_t n) { return s[n].to_double(); });
}

}  // namespace bellforge::series
