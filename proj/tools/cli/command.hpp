#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bellforge::cli {

enum class Subcommand { kBell, kStirling, kHarmonic, kAltsum, kBernoulli, kZetaEven, kZetaApprox, kVerify };
enum class OutputFormat { kText, kJson };

/// A validated invocation. Parameter values are stored in canonical form
/// (rationals reduced, integers without leading zeros).
struct Command {
  Subcommand subcommand = Subcommand::kVerify;
  std::map<std::string, std::string> parameters;
  OutputFormat format = OutputFormat::kText;

  friend bool operator==(const Command&, const Command&) = default;
};

/// Bad flags or values; the message names the offending flag.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was requested; what() is the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string_view subcommand_name(Subcommand s);

/// Parses the arguments after the program name.
Command parse_command(const std::vector<std::string>& args);

struct Execution {
  int exit_code = 0;  // 0 pass, 1 verification failure
  std::string output;
};

Execution execute(const Command& command);

}  // namespace bellforge::cli
