#include "bellforge/identity_report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace bellforge {

std::string IdentityReport::tolerance_str() const { return tolerance ? render(*tolerance) : "exact"; }

std::string render(const Rational& q) { return q.str(); }

std::string render(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string render(std::span<const Rational> values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].str();
  }
  return out + "]";
}

std::string render(const RationalSeries& s) { return render(s.coefficients()); }

IdentityReport exact_report(std::string identity, Params params, const Rational& lhs, const Rational& rhs) {
  return {std::move(identity), std::move(params), render(lhs), render(rhs), lhs == rhs, std::nullopt};
}

IdentityReport exact_report(std::string identity, Params params, const RationalSeries& lhs,
                            const RationalSeries& rhs) {
  return {std::move(identity), std::move(params), render(lhs), render(rhs), lhs == rhs, std::nullopt};
}

IdentityReport float_report(std::string identity, Params params, double lhs, double rhs, double abs_tol) {
  const bool ok = std::isfinite(lhs) && std::isfinite(rhs) && std::fabs(lhs - rhs) <= abs_tol;
  return {std::move(identity), std::move(params), render(lhs), render(rhs), ok, abs_tol};
}

IdentityReport error_report(std::string identity, Params params, const std::string& message) {
  params["error"] = message;
  return {std::move(identity), std::move(params), "error", "error", false, std::nullopt};
}

bool all_passed(std::span<const IdentityReport> reports) {
  return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.passed; });
}

}  // namespace bellforge
