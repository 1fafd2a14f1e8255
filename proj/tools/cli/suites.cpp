#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include "bellforge/alternating.hpp"
#include "bellforge/bell.hpp"
#include "bellforge/bernoulli.hpp"
#include "bellforge/gamma.hpp"
#include "bellforge/generating_functions.hpp"
#include "bellforge/harmonic.hpp"
#include "bellforge/integrals.hpp"
#include "bellforge/series.hpp"
#include "bellforge/stirling.hpp"
#include "bellforge/zeta_constants.hpp"
#include "bellforge/zeta_even.hpp"
#include "worker_pool.hpp"

namespace bellforge::cli {

namespace {

using Cell = std::function<std::vector<IdentityReport>()>;
using Reports = std::vector<IdentityReport>;

constexpr std::uint64_t kSeed = 0x5eed'be11'f0a9'e001ULL;

Rational random_rational(std::mt19937_64& rng, long bound = 50) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  const long d = den(rng);
  return Rational(BigInt(num(rng)), BigInt(d));
}

std::vector<Rational> random_vector(std::mt19937_64& rng, std::size_t size) {
  std::vector<Rational> v;
  v.reserve(size);
  for (std::size_t i = 0; i < size; ++i) v.push_back(random_rational(rng));
  return v;
}

std::vector<Rational> row_as_rationals(const StirlingRow& row) {
  return {row.entries.begin(), row.entries.end()};
}

// Coefficient-list comparison rendered as "[a, b, ...]".
IdentityReport span_report(std::string id, Params p, const std::vector<Rational>& lhs,
                           const std::vector<Rational>& rhs) {
  return exact_report(std::move(id), std::move(p), RationalSeries(lhs), RationalSeries(rhs));
}

const std::vector<Rational> kCoppoShifts{Rational(1), Rational(1, 2), Rational(3, 2), Rational(2, 3), Rational(7, 5)};
const std::vector<Rational> kShortShifts{Rational(1), Rational(1, 2), Rational(3, 2)};

// Y_1..Y_5 written out term by term.
Rational printed_bell(unsigned r, const std::vector<Rational>& x) {
  const auto& x1 = x[0];
  switch (r) {
    case 1:
      return x1;
    case 2:
      return x1 * x1 + x[1];
    case 3:
      return x1 * x1 * x1 + Rational(3) * x1 * x[1] + x[2];
    case 4:
      return x1.pow(4) + Rational(6) * x1 * x1 * x[1] + Rational(4) * x1 * x[2] + Rational(3) * x[1] * x[1] + x[3];
    case 5:
      return x1.pow(5) + Rational(10) * x1.pow(3) * x[1] + Rational(15) * x1 * x[1] * x[1] +
             Rational(10) * x1 * x1 * x[2] + Rational(10) * x[1] * x[2] + Rational(5) * x1 * x[3] + x[4];
    default:
      throw std::invalid_argument("printed_bell: r must be 1..5");
  }
}

void bell_cells(const Budget& budget, std::vector<Cell>& cells) {
  std::mt19937_64 rng(kSeed);
  const unsigned r_max = budget.r(14);

  for (unsigned s = 0; s < 50; ++s) {
    auto xs = random_vector(rng, r_max);
    cells.push_back([s, xs = std::move(xs)] {
      Reports out;
      const std::span<const Rational> all(xs);
      for (std::size_t r = 1; r <= all.size(); ++r) {
        const auto sub = all.first(r);
        out.push_back(exact_report("bell-partition-vs-recurrence",
                                   {{"sample", std::to_string(s)}, {"r", std::to_string(r)}},
                                   bell_partition_sum<Rational>(sub), bell<Rational>(sub)));
      }
      return out;
    });
  }

  for (unsigned s = 0; s < 20; ++s) {
    auto xs = random_vector(rng, 5);
    cells.push_back([s, xs = std::move(xs)] {
      Reports out;
      for (unsigned r = 1; r <= 5; ++r) {
        out.push_back(exact_report("bell-printed-polynomials", {{"sample", std::to_string(s)}, {"r", std::to_string(r)}},
                                   bell<Rational>(std::span<const Rational>(xs).first(r)), printed_bell(r, xs)));
      }
      return out;
    });
  }

  const unsigned law_r = std::min(r_max, 10u);
  for (unsigned s = 0; s < 20; ++s) {
    Rational a = random_rational(rng);
    auto xs = random_vector(rng, law_r);
    cells.push_back([s, a, xs = std::move(xs)] {
      Reports out;
      std::vector<Rational> scaled(xs.size());
      std::vector<Rational> flipped(xs.size());
      Rational ap = 1;
      for (std::size_t j = 0; j < xs.size(); ++j) {
        ap *= a;
        scaled[j] = ap * xs[j];
        flipped[j] = Rational(minus_one_pow(static_cast<std::int64_t>(j) + 1)) * xs[j];
      }
      const auto y = bell_recurrence<Rational>(xs);
      const auto ys = bell_recurrence<Rational>(scaled);
      const auto yf = bell_recurrence<Rational>(flipped);
      for (std::size_t r = 1; r <= xs.size(); ++r) {
        const Params p{{"sample", std::to_string(s)}, {"r", std::to_string(r)}};
        out.push_back(exact_report("bell-scaling-law", p, ys[r], a.pow(static_cast<int>(r)) * y[r]));
        out.push_back(exact_report("bell-sign-law", p, yf[r], Rational(minus_one_pow(static_cast<std::int64_t>(r))) * y[r]));
      }
      return out;
    });
  }

  auto xs = random_vector(rng, 12);
  cells.push_back([xs = std::move(xs)] { return Reports{bell_gen_fun_check(xs, 12)}; });
}

void stirling_cells(const Budget& budget, std::vector<Cell>& cells) {
  const unsigned n_max = budget.n(14);
  for (unsigned n = 1; n <= n_max; ++n) {
    cells.push_back([n] {
      Reports out;
      const Params p{{"n", std::to_string(n)}};
      const auto oracle = row_as_rationals(stirling_row_oracle(n));
      out.push_back(span_report("stirling-bell-route", p, row_as_rationals(stirling_row_via_bell(n)), oracle));
      out.push_back(span_report("stirling-shen-recurrence", p, row_as_rationals(shen_recurrence_row(n)), oracle));
      for (unsigned k = 1; k <= 4; ++k) {
        Params pk = p;
        pk["k"] = std::to_string(k);
        out.push_back(exact_report("stirling-closed-form", std::move(pk), Rational(stirling_closed_form(n, k)),
                                   oracle.size() > k ? oracle[k] : Rational(0)));
      }
      return out;
    });
  }
}

void section2_cells(const Budget& budget, std::vector<Cell>& cells) {
  const unsigned r_max = budget.r(5);
  cells.push_back([r_max] { return cauchy_report(r_max, 20); });
  for (const auto& x : kShortShifts) cells.push_back([x] { return section2_report(x, 16); });
}

void section3_cells(const Budget& budget, std::vector<Cell>& cells) {
  const unsigned coppo_n = budget.n(10);
  const unsigned coppo_r = budget.r(5);
  for (unsigned n = 1; n <= coppo_n; ++n) {
    cells.push_back([n, coppo_r] {
      Reports out;
      for (unsigned r = 0; r <= coppo_r; ++r) {
        for (const auto& x : kCoppoShifts) {
          const AltSumParams ap{n, r, x};
          const Params p{{"n", std::to_string(n)}, {"r", std::to_string(r)}, {"x", x.str()}};
          const Rational brute = alternating_sum_brute(ap);
          out.push_back(exact_report("coppo-bell", p, coppo_bell(ap), brute));
          out.push_back(exact_report("coppo-bell-signed", p, coppo_bell_signed(ap), brute));
          IdentityReport pos = exact_report("alternating-sum-positive", p, brute, Rational(0));
          pos.rhs = "> 0";
          pos.passed = brute.sign() > 0;
          out.push_back(std::move(pos));
        }
      }
      return out;
    });
  }

  const unsigned snr_n = budget.n(25);
  const unsigned snr_r = budget.r(6);
  for (unsigned n = 1; n <= snr_n; ++n) {
    cells.push_back([n, snr_r] {
      Reports out;
      for (unsigned r = 0; r <= snr_r; ++r) {
        const Params p{{"n", std::to_string(n)}, {"r", std::to_string(r)}};
        const Rational brute = snr_brute(n, r);
        out.push_back(exact_report("snr-bell", p, snr_bell(n, r), brute));
        out.push_back(exact_report("snr-bell-signed", p, snr_bell_signed(n, r), brute));
      }
      return out;
    });
  }

  const unsigned closed_n = budget.n(50);
  cells.push_back([closed_n] {
    Reports out;
    for (unsigned n = 1; n <= closed_n; ++n) {
      const Params p{{"n", std::to_string(n)}};
      out.push_back(exact_report("snr-euler", p, snr_euler(n), snr_brute(n, 1)));
      out.push_back(exact_report("snr-quadratic", p, snr_quadratic(n), snr_brute(n, 2)));
      out.push_back(exact_report("snr-cubic", p, snr_cubic(n), snr_brute(n, 3)));
    }
    return out;
  });

  const unsigned refl_n = budget.n(10);
  const unsigned refl_r = budget.r(8);
  cells.push_back([refl_n, refl_r] {
    Reports out;
    for (unsigned n = 1; n <= refl_n; ++n) {
      for (unsigned r = 1; r <= refl_r; ++r) {
        const auto plus = harmonic_bell_args(n, r, 1, HarmonicSigns::kAllPositive);
        const auto minus = harmonic_bell_args(n, r, 1, HarmonicSigns::kMinusPlus);
        out.push_back(exact_report("bell-sign-reflection", {{"n", std::to_string(n)}, {"r", std::to_string(r)}},
                                   bell<Rational>(plus),
                                   Rational(minus_one_pow(r)) * bell<Rational>(minus)));
      }
      out.push_back(exact_report("alternating-constant-term", {{"n", std::to_string(n)}}, -snr_brute(n, 0), Rational(1)));
    }
    return out;
  });

  const unsigned exp_n = budget.n(8);
  for (unsigned n = 1; n <= exp_n; ++n) {
    cells.push_back([n] {
      Reports out = gamma_ratio_series_check(n, 12);
      for (const auto& x : kShortShifts) out.push_back(general_exp_identity_check(n, x, 12));
      return out;
    });
  }

  const unsigned poly_r = budget.r(4);
  for (unsigned r = 1; r <= poly_r; ++r) cells.push_back([r] { return polylog_identity_check(r, 12); });

  cells.push_back([] {
    const ZetaEvenTable q = zeta_even_rational(2);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double refs[] = {q.at(1).to_double() * pi2, default_zeta_constants().zeta(3), q.at(2).to_double() * pi2 * pi2};
    Reports out;
    for (unsigned r = 2; r <= 4; ++r) {
      out.push_back(float_report("zeta-via-half", {{"r", std::to_string(r)}, {"T", "60"}}, zeta_via_half(r, 60).value,
                                 refs[r - 2], 1e-10));
    }
    return out;
  });
}

void section4_cells(const Budget& budget, std::vector<Cell>& cells) {
  const unsigned n_max = budget.n(6);
  const unsigned r_max = budget.r(4);
  for (unsigned n = 1; n <= n_max; ++n) {
    cells.push_back([n, r_max] {
      Reports out;
      for (unsigned r = 0; r <= r_max; ++r) {
        for (const auto& x : kShortShifts) out.push_back(log_beta_check(n, r, x));
      }
      for (unsigned r = 1; r <= r_max; ++r) out.push_back(integral_sum_bridge(n, r));
      return out;
    });
  }
  const unsigned adamchik_n = budget.n(100);
  cells.push_back([adamchik_n] { return adamchik_check(adamchik_n); });
  cells.push_back([] { return gamma_deriv_check(6, 8, default_zeta_constants()); });
}

void section5_cells(const Budget& budget, std::vector<Cell>& cells) {
  cells.push_back([] {
    Reports out;
    for (unsigned a = 2; a <= 8; ++a) out.push_back(norlund_telescope(a, 50));
    return out;
  });
  const unsigned r_max = budget.r(3);
  for (unsigned r = 1; r <= r_max; ++r) {
    cells.push_back([r] {
      Reports out;
      for (const auto& a : {Rational(1), Rational(2), Rational(1, 2)}) out.push_back(hurwitz_integral_check(r, a));
      return out;
    });
  }
}

void section6_cells(const Budget& budget, std::vector<Cell>& cells) {
  const unsigned N = budget.n(20);
  cells.push_back([N] {
    const BernoulliTable b = bernoulli(N);
    const Params p{{"N", std::to_string(N)}};
    return Reports{span_report("bernoulli-reciprocal-oracle", p, b.values, bernoulli_reciprocal_oracle(N).values),
                   span_report("bernoulli-defining-sum", p, b.values, bernoulli_defining_sum_oracle(N).values)};
  });
  cells.push_back([N] { return Reports{ramanujan_log_check(std::max(N, 2u))}; });
  cells.push_back([N] { return bernoulli_bell_check(N); });
  cells.push_back([] { return bernoulli_recurrence_check(10); });
  cells.push_back([] {
    Reports out;
    for (unsigned n = 1; n <= 10; ++n) {
      for (auto& r : bernoulli_zeta_identity(n)) out.push_back(std::move(r));
    }
    return out;
  });
  cells.push_back([] {
    // exp_transform against the recurrence, and the power laws of x/(e^x - 1).
    constexpr std::size_t order = 16;
    const BernoulliTable B = bernoulli(order);
    std::vector<Rational> b;
    for (std::size_t m = 1; m <= order; ++m) {
      b.push_back(Rational(minus_one_pow(static_cast<std::int64_t>(m) + 1)) * B[m] / Rational(factorial(m)));
    }
    const ExpTransform t = exp_transform(0, b);
    std::vector<Rational> expected;
    for (std::size_t n = 0; n <= order; ++n) expected.push_back(B[n] / Rational(factorial(n)));
    const Params p{{"N", std::to_string(order)}};
    Reports out{span_report("exp-transform-bernoulli", p, t.coefficients, expected)};

    std::vector<Rational> b_full{Rational(0)};
    b_full.insert(b_full.end(), b.begin(), b.end());
    const RationalSeries via_recurrence = series::exp_recurrence(RationalSeries(b_full), order);
    out.push_back(exact_report("exp-transform-recurrence", p, RationalSeries(t.coefficients), via_recurrence));

    const RationalSeries h(expected);
    const RationalSeries h2 = series::mul(h, h, order);
    const RationalSeries h3 = series::mul(h2, h, order);
    out.push_back(exact_report("series-power-2", p, series::pow(h, 2, order), h2));
    out.push_back(exact_report("series-power-3", p, series::pow(h, 3, order), h3));
    out.push_back(exact_report("series-power-reciprocal", p, series::mul(series::pow(h, -1, order), h, order),
                               RationalSeries::one(order)));
    return out;
  });
  cells.push_back([] { return zeta_even_bernoulli_check(8); });
  cells.push_back([] { return sin_product_check(6); });
  cells.push_back([] { return gamma_series_check(24, default_zeta_constants()); });
  cells.push_back([] { return barnes_g_check(24, default_zeta_constants()); });
}

using Builder = void (*)(const Budget&, std::vector<Cell>&);

const std::vector<std::pair<std::string, Builder>>& builders() {
  static const std::vector<std::pair<std::string, Builder>> b{
      {"bell", bell_cells},         {"stirling", stirling_cells}, {"section2", section2_cells},
      {"section3", section3_cells}, {"section4", section4_cells}, {"section5", section5_cells},
      {"section6", section6_cells},
  };
  return b;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, _] : builders()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

bool is_suite(std::string_view name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<IdentityReport> run_suite(std::string_view name, const Budget& budget, unsigned workers) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  std::vector<Cell> cells;
  for (const auto& [suite, build] : builders()) {
    if (name == "all" || name == suite) build(budget, cells);
  }

  auto chunks = parallel_map<Reports>(cells.size(), workers, [&](std::size_t i) {
    try {
      return cells[i]();
    } catch (const std::exception& e) {
      return Reports{error_report("cell-" + std::to_string(i), {}, e.what())};
    }
  });

  std::vector<IdentityReport> out;
  for (auto& chunk : chunks) {
    for (auto& r : chunk) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace bellforge::cli
