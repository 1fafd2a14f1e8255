#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "bellforge/rational.hpp"
#include "command.hpp"
#include "suites.hpp"
#include "worker_pool.hpp"

using namespace bellforge;
using namespace bellforge::cli;

namespace {

Execution run(const std::vector<std::string>& args) { return execute(parse_command(args)); }

}  // namespace

TEST(CliParse, CanonicalParameters) {
  const auto cmd = parse_command({"altsum", "--n", "007", "--r", "1", "--x", "4/8"});
  EXPECT_EQ(cmd.subcommand, Subcommand::kAltsum);
  EXPECT_EQ(cmd.parameters.at("n"), "7");
  EXPECT_EQ(cmd.parameters.at("x"), "1/2");
  EXPECT_EQ(cmd.format, OutputFormat::kText);
  EXPECT_EQ(parse_command({"harmonic", "--n", "3", "--m", "2"}).parameters.at("x"), "1");
  EXPECT_EQ(parse_command({"verify"}).parameters.at("suite"), "all");
  EXPECT_EQ(parse_command({"bernoulli", "--N", "3", "--format", "json"}).format, OutputFormat::kJson);
}

TEST(CliParse, UsageErrors) {
  EXPECT_THROW(parse_command({}), UsageError);
  EXPECT_THROW(parse_command({"frobnicate"}), UsageError);
  EXPECT_THROW(parse_command({"stirling"}), UsageError);
  EXPECT_THROW(parse_command({"stirling", "--n", "0"}), UsageError);
  EXPECT_THROW(parse_command({"stirling", "--n", "-3"}), UsageError);
  EXPECT_THROW(parse_command({"bell", "--args", "1,,1"}), UsageError);
  EXPECT_THROW(parse_command({"altsum", "--n", "2", "--r", "1", "--x", "1/0"}), UsageError);
  EXPECT_THROW(parse_command({"verify", "--suite", "nope"}), UsageError);
  EXPECT_THROW(parse_command({"bernoulli", "--N", "3", "--format", "xml"}), UsageError);
  EXPECT_THROW(parse_command({"zeta-approx", "--r", "1"}), UsageError);
  EXPECT_THROW(parse_command({"--help"}), HelpRequested);
  EXPECT_THROW(parse_command({"bell", "--help"}), HelpRequested);
}

TEST(CliExecute, TextOutputs) {
  EXPECT_EQ(run({"stirling", "--n", "4"}).output, "s(4, k), k = 0..4: 0 -6 11 -6 1\nagreement: true\n");
  EXPECT_EQ(run({"bernoulli", "--N", "4"}).output, "1, -1/2, 1/6, 0, -1/30\n");
  EXPECT_EQ(run({"bell", "--args", "1,1,1"}).output, "Y_0 = 1\nY_1 = 1\nY_2 = 2\nY_3 = 5\n");
  const auto alt = run({"altsum", "--n", "2", "--r", "1", "--x", "1"});
  EXPECT_EQ(alt.exit_code, 0);
  EXPECT_NE(alt.output.find("11/18"), std::string::npos);
  EXPECT_NE(alt.output.find("agreement: true"), std::string::npos);
}

TEST(CliExecute, PoleIsAnError) {
  const auto e = run({"altsum", "--n", "3", "--r", "1", "--x", "-2"});
  EXPECT_NE(e.exit_code, 0);
  EXPECT_NE(e.output.find("x + k = 0"), std::string::npos);
}

TEST(CliExecute, JsonRationalsRoundTrip) {
  const auto out = run({"bell", "--args", "1/2,-3,2/7", "--format", "json"});
  const auto j = nlohmann::json::parse(out.output);
  EXPECT_EQ(j.at("command"), "bell");
  const auto& values = j.at("values");
  ASSERT_EQ(values.size(), 4u);
  // Y_3(a, b, c) = a^3 + 3ab + c
  const Rational a(1, 2), b(-3), c(2, 7);
  EXPECT_EQ(Rational::parse(values[3].get<std::string>()), a * a * a + Rational(3) * a * b + c);

  const auto bern = nlohmann::json::parse(run({"bernoulli", "--N", "12", "--format", "json"}).output);
  EXPECT_EQ(Rational::parse(bern.at("values")[12].get<std::string>()), Rational(-691, 2730));
}

TEST(CliVerify, JsonSchema) {
  const auto out = run({"verify", "--suite", "stirling", "--max-n", "5", "--format", "json"});
  EXPECT_EQ(out.exit_code, 0);
  const auto j = nlohmann::json::parse(out.output);
  EXPECT_EQ(j.at("suite"), "stirling");
  EXPECT_TRUE(j.at("passed").get<bool>());
  ASSERT_FALSE(j.at("results").empty());
  for (const auto& r : j.at("results")) {
    for (const char* key : {"identity", "params", "lhs", "rhs", "passed", "tolerance"}) EXPECT_TRUE(r.contains(key)) << key;
  }
}

TEST(CliVerify, OrderIndependentOfWorkerCount) {
  Budget budget;
  budget.max_n = 6;
  budget.max_r = 3;
  for (const char* suite : {"bell", "section3", "section6"}) {
    const auto one = run_suite(suite, budget, 1);
    const auto four = run_suite(suite, budget, 4);
    ASSERT_EQ(one.size(), four.size()) << suite;
    for (std::size_t i = 0; i < one.size(); ++i) {
      EXPECT_EQ(one[i].identity, four[i].identity);
      EXPECT_EQ(one[i].params, four[i].params);
      EXPECT_EQ(one[i].lhs, four[i].lhs);
      EXPECT_TRUE(one[i].passed) << one[i].identity;
    }
  }
  EXPECT_THROW(run_suite("nope", budget, 1), std::invalid_argument);
}

TEST(WorkerPool, KeepsIndexOrderAndRethrows) {
  const auto squares = parallel_map<long>(100, 4, [](std::size_t i) { return static_cast<long>(i * i); });
  for (std::size_t i = 0; i < squares.size(); ++i) ASSERT_EQ(squares[i], static_cast<long>(i * i));
  EXPECT_THROW(parallel_map<int>(10, 3,
                                 [](std::size_t i) -> int {
                                   if (i == 7) throw std::runtime_error("boom");
                                   return 0;
                                 }),
               std::runtime_error);
  EXPECT_GE(worker_count(), 1u);
}
