#include "command.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bellforge/alternating.hpp"
#include "bellforge/bell.hpp"
#include "bellforge/bernoulli.hpp"
#include "bellforge/errors.hpp"
#include "bellforge/harmonic.hpp"
#include "bellforge/stirling.hpp"
#include "bellforge/zeta_even.hpp"
#include "suites.hpp"
#include "worker_pool.hpp"

namespace bellforge::cli {

namespace {

using json = nlohmann::ordered_json;

struct Limits {
  unsigned min;
  unsigned max;
};

unsigned parse_unsigned(const std::string& flag, const std::string& text, Limits limits) {
  unsigned value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw UsageError(flag + ": expected a non-negative integer, got '" + text + "'");
  }
  if (value < limits.min || value > limits.max) {
    throw UsageError(flag + ": " + text + " outside [" + std::to_string(limits.min) + ", " +
                     std::to_string(limits.max) + "]");
  }
  return value;
}

Rational parse_rational(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + ": malformed rational '" + text + "' (expected p/q or an integer)");
  }
}

std::vector<Rational> parse_rational_list(const std::string& flag, const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (item.empty()) throw UsageError(flag + ": empty entry in '" + text + "'");
    out.push_back(parse_rational(flag, item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(const std::vector<Rational>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].str();
  }
  return out;
}

json to_json(const std::vector<Rational>& values) {
  json a = json::array();
  for (const auto& v : values) a.push_back(v.str());
  return a;
}

std::vector<Rational> row_values(const StirlingRow& row) { return {row.entries.begin(), row.entries.end()}; }

unsigned param_u(const Command& c, const std::string& key) {
  return static_cast<unsigned>(std::stoul(c.parameters.at(key)));
}

Rational param_q(const Command& c, const std::string& key) { return Rational::parse(c.parameters.at(key)); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Execution error_output(const Command& c, const std::string& message) {
  if (c.format == OutputFormat::kJson) {
    json j{{"command", subcommand_name(c.subcommand)}, {"error", message}, {"passed", false}};
    return {1, dump(j)};
  }
  return {1, "error: " + message + "\n"};
}

Execution run_bell(const Command& c) {
  const auto args = parse_rational_list("--args", c.parameters.at("args"));
  const auto y = bell_recurrence<Rational>(args);
  if (c.format == OutputFormat::kJson) {
    json j{{"command", "bell"}, {"args", to_json(args)}, {"values", to_json(y)}};
    return {0, dump(j)};
  }
  std::string out;
  for (std::size_t r = 0; r < y.size(); ++r) out += "Y_" + std::to_string(r) + " = " + y[r].str() + "\n";
  return {0, out};
}

Execution run_stirling(const Command& c) {
  const unsigned n = param_u(c, "n");
  const auto oracle = row_values(stirling_row_oracle(n));
  const auto via_bell = row_values(stirling_row_via_bell(n));
  const auto shen = row_values(shen_recurrence_row(n));
  const bool agree = oracle == via_bell && oracle == shen;
  if (c.format == OutputFormat::kJson) {
    json j{{"command", "stirling"},
           {"n", n},
           {"row", to_json(oracle)},
           {"routes", {{"oracle", to_json(oracle)}, {"bell", to_json(via_bell)}, {"shen", to_json(shen)}}},
           {"agreement", agree}};
    return {agree ? 0 : 1, dump(j)};
  }
  std::string out = "s(" + std::to_string(n) + ", k), k = 0.." + std::to_string(n) + ": " + join(oracle, " ") + "\n";
  if (!agree) {
    out += "bell route: " + join(via_bell, " ") + "\n";
    out += "shen recurrence: " + join(shen, " ") + "\n";
  }
  out += std::string("agreement: ") + (agree ? "true" : "false") + "\n";
  return {agree ? 0 : 1, out};
}

Execution run_harmonic(const Command& c) {
  const unsigned n = param_u(c, "n");
  const unsigned m = param_u(c, "m");
  const Rational x = param_q(c, "x");
  std::vector<Rational> values;
  try {
    values.push_back(Rational(0));
    for (unsigned k = 1; k <= n; ++k) values.push_back(harmonic_shifted(k, m, x));
  } catch (const PoleError& e) {
    return error_output(c, e.what());
  }
  if (c.format == OutputFormat::kJson) {
    json j{{"command", "harmonic"}, {"n", n}, {"m", m}, {"x", x.str()}, {"values", to_json(values)}};
    return {0, dump(j)};
  }
  std::string out;
  for (unsigned k = 0; k <= n; ++k) {
    out += "H_" + std::to_string(k) + "^(" + std::to_string(m) + ")(" + x.str() + ") = " + values[k].str() + "\n";
  }
  return {0, out};
}

Execution run_altsum(const Command& c) {
  const AltSumParams p{param_u(c, "n"), param_u(c, "r"), param_q(c, "x")};
  Rational brute;
  Rational coppo;
  Rational signed_form;
  try {
    brute = alternating_sum_brute(p);
    coppo = coppo_bell(p);
    signed_form = coppo_bell_signed(p);
  } catch (const PoleError& e) {
    return error_output(c, e.what());
  }
  const bool agree = brute == coppo && brute == signed_form;
  if (c.format == OutputFormat::kJson) {
    json j{{"command", "altsum"}, {"n", p.n},          {"r", p.r},
           {"x", p.x.str()},      {"brute", brute.str()}, {"bell", coppo.str()},
           {"bell_signed", signed_form.str()}, {"agreement", agree}};
    return {agree ? 0 : 1, dump(j)};
  }
  std::string out = "brute force:    " + brute.str() + "\n";
  out += "bell form:      " + coppo.str() + "\n";
  out += "signed form:    " + signed_form.str() + "\n";
  out += std::string("agreement: ") + (agree ? "true" : "false") + "\n";
  return {agree ? 0 : 1, out};
}

Execution run_bernoulli(const Command& c) {
  const BernoulliTable b = bernoulli(param_u(c, "N"));
  if (c.format == OutputFormat::kJson) {
    json j{{"command", "bernoulli"}, {"N", b.size() - 1}, {"values", to_json(b.values)}};
    return {0, dump(j)};
  }
  return {0, join(b.values, ", ") + "\n"};
}

Execution run_zeta_even(const Command& c) {
  const ZetaEvenTable t = zeta_even_rational(param_u(c, "N"));
  const double pi2 = std::numbers::pi * std::numbers::pi;
  json rows = json::array();
  std::string out;
  double pi_power = 1.0;
  for (std::size_t n = 1; n <= t.size(); ++n) {
    pi_power *= pi2;
    const double value = t.at(n).to_double() * pi_power;
    rows.push_back({{"n", n}, {"q", t.at(n).str()}, {"value", render(value)}});
    out += "zeta(" + std::to_string(2 * n) + ") = " + t.at(n).str() + " pi^" + std::to_string(2 * n) + " = " +
           render(value) + "\n";
  }
  if (c.format == OutputFormat::kJson) return {0, dump(json{{"command", "zeta-even"}, {"rows", rows}})};
  return {0, out};
}

Execution run_zeta_approx(const Command& c) {
  const unsigned r = param_u(c, "r");
  const unsigned T = param_u(c, "T");
  const ZetaHalfResult z = zeta_via_half(r, T);
  if (c.format == OutputFormat::kJson) {
    json j{{"command", "zeta-approx"}, {"r", r}, {"T", T}, {"value", render(z.value)}, {"last_term", render(z.last_term)}};
    return {0, dump(j)};
  }
  return {0, "zeta(" + std::to_string(r) + ") ~ " + render(z.value) + " (T = " + std::to_string(T) +
                 ", last term " + render(z.last_term) + ")\n"};
}

std::string format_params(const Params& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += " ";
    out += k + "=" + v;
  }
  return out;
}

Execution run_verify(const Command& c) {
  Budget budget;
  if (c.parameters.count("max-n")) budget.max_n = param_u(c, "max-n");
  if (c.parameters.count("max-r")) budget.max_r = param_u(c, "max-r");
  const std::string& suite = c.parameters.at("suite");
  const auto reports = run_suite(suite, budget, worker_count());
  const bool passed = all_passed(reports);

  if (c.format == OutputFormat::kJson) {
    json results = json::array();
    for (const auto& r : reports) {
      results.push_back({{"identity", r.identity},
                         {"params", r.params},
                         {"lhs", r.lhs},
                         {"rhs", r.rhs},
                         {"passed", r.passed},
                         {"tolerance", r.tolerance_str()}});
    }
    return {passed ? 0 : 1, dump(json{{"suite", suite}, {"results", results}, {"passed", passed}})};
  }

  std::ostringstream out;
  std::size_t n_pass = 0;
  for (const auto& r : reports) {
    n_pass += r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << r.identity;
    if (!r.params.empty()) out << " [" << format_params(r.params) << "]";
    if (!r.passed) out << "\n     lhs = " << r.lhs << "\n     rhs = " << r.rhs << "\n     tolerance = " << r.tolerance_str();
    out << "\n";
  }
  out << "suite " << suite << ": " << n_pass << "/" << reports.size() << " passed\n";
  return {passed ? 0 : 1, out.str()};
}

}  // namespace

std::string_view subcommand_name(Subcommand s) {
  switch (s) {
    case Subcommand::kBell: return "bell";
    case Subcommand::kStirling: return "stirling";
    case Subcommand::kHarmonic: return "harmonic";
    case Subcommand::kAltsum: return "altsum";
    case Subcommand::kBernoulli: return "bernoulli";
    case Subcommand::kZetaEven: return "zeta-even";
    case Subcommand::kZetaApprox: return "zeta-approx";
    case Subcommand::kVerify: return "verify";
  }
  return "?";
}

Command parse_command(const std::vector<std::string>& args) {
  CLI::App app{"Complete Bell polynomial identities: exact tables and verification", "bellforge"};
  app.require_subcommand(1);

  std::map<std::string, std::string> raw;
  std::string format = "text";

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  const auto add = [&](CLI::App* sub, const std::string& name, const std::string& help, bool required,
                       const std::string& fallback = {}) {
    if (!fallback.empty()) raw[name] = fallback;
    auto* opt = sub->add_option("--" + name, raw[name], help);
    if (required) opt->required();
  };

  auto* bell_cmd = app.add_subcommand("bell", "Y_0..Y_r for comma-separated rational arguments");
  add(bell_cmd, "args", "x_1,...,x_r as rationals", true);
  auto* stirling_cmd = app.add_subcommand("stirling", "Row s(n, 0..n) by three routes");
  add(stirling_cmd, "n", "row index (>= 1)", true);
  auto* harmonic_cmd = app.add_subcommand("harmonic", "H_k^(m)(x) for k = 0..n");
  add(harmonic_cmd, "n", "largest k", true);
  add(harmonic_cmd, "m", "order (>= 1)", true);
  add(harmonic_cmd, "x", "shift (rational)", false, "1");
  auto* altsum_cmd = app.add_subcommand("altsum", "sum_k C(n,k)(-1)^k/(k+x)^(r+1), brute force and Bell form");
  add(altsum_cmd, "n", "n (>= 1)", true);
  add(altsum_cmd, "r", "power index (>= 0)", true);
  add(altsum_cmd, "x", "shift (rational)", false, "1");
  auto* bernoulli_cmd = app.add_subcommand("bernoulli", "B_0..B_N");
  add(bernoulli_cmd, "N", "last index", true);
  auto* zeta_even_cmd = app.add_subcommand("zeta-even", "zeta(2n) = q_n pi^(2n) for n = 1..N");
  add(zeta_even_cmd, "N", "table size", true);
  auto* zeta_approx_cmd = app.add_subcommand("zeta-approx", "zeta(r) from the t = 1/2 Bell series");
  add(zeta_approx_cmd, "r", "argument (>= 2)", true);
  add(zeta_approx_cmd, "T", "number of terms", false, "60");
  auto* verify_cmd = app.add_subcommand("verify", "Run identity checks");
  add(verify_cmd, "suite", "bell, stirling, section2..section6 or all", false, "all");
  add(verify_cmd, "max-n", "override the n range of every check", false);
  add(verify_cmd, "max-r", "override the r range of every check", false);

  for (auto* sub : app.get_subcommands({})) add_format(sub);

  if (!args.empty() && !args.front().starts_with("-") && app.get_subcommand_no_throw(args.front()) == nullptr) {
    throw UsageError("unknown subcommand '" + args.front() + "'");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto selected = app.get_subcommands();
    throw HelpRequested(selected.empty() ? app.help() : selected.front()->help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  Command cmd;
  cmd.format = format == "json" ? OutputFormat::kJson : OutputFormat::kText;

  const auto given = [&](const std::string& key) { return chosen->count("--" + key) > 0 || !raw[key].empty(); };
  const auto set_u = [&](const std::string& key, Limits limits) {
    cmd.parameters[key] = std::to_string(parse_unsigned("--" + key, raw[key], limits));
  };
  const auto set_q = [&](const std::string& key) { cmd.parameters[key] = parse_rational("--" + key, raw[key]).str(); };

  if (name == "bell") {
    cmd.subcommand = Subcommand::kBell;
    const auto values = parse_rational_list("--args", raw["args"]);
    if (values.size() > 40) throw UsageError("--args: at most 40 arguments");
    cmd.parameters["args"] = join(values, ",");
  } else if (name == "stirling") {
    cmd.subcommand = Subcommand::kStirling;
    set_u("n", {1, 300});
  } else if (name == "harmonic") {
    cmd.subcommand = Subcommand::kHarmonic;
    set_u("n", {0, 100000});
    set_u("m", {1, 64});
    set_q("x");
  } else if (name == "altsum") {
    cmd.subcommand = Subcommand::kAltsum;
    set_u("n", {1, 2000});
    set_u("r", {0, 40});
    set_q("x");
  } else if (name == "bernoulli") {
    cmd.subcommand = Subcommand::kBernoulli;
    set_u("N", {0, 1000});
  } else if (name == "zeta-even") {
    cmd.subcommand = Subcommand::kZetaEven;
    set_u("N", {1, 200});
  } else if (name == "zeta-approx") {
    cmd.subcommand = Subcommand::kZetaApprox;
    set_u("r", {2, 30});
    set_u("T", {1, 5000});
  } else {
    cmd.subcommand = Subcommand::kVerify;
    if (!is_suite(raw["suite"])) throw UsageError("--suite: unknown suite '" + raw["suite"] + "'");
    cmd.parameters["suite"] = raw["suite"];
    if (given("max-n")) set_u("max-n", {1, 1000});
    if (given("max-r")) set_u("max-r", {0, 40});
  }
  return cmd;
}

Execution execute(const Command& command) {
  switch (command.subcommand) {
    case Subcommand::kBell: return run_bell(command);
    case Subcommand::kStirling: return run_stirling(command);
    case Subcommand::kHarmonic: return run_harmonic(command);
    case Subcommand::kAltsum: return run_altsum(command);
    case Subcommand::kBernoulli: return run_bernoulli(command);
    case Subcommand::kZetaEven: return run_zeta_even(command);
    case Subcommand::kZetaApprox: return run_zeta_approx(command);
    case Subcommand::kVerify: return run_verify(command);
  }
  return {2, "unreachable\n"};
}

}  // namespace bellforge::cli
