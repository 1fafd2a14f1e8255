#include <iostream>
#include <string>
#include <vector>

#include "command.hpp"

int main(int argc, char** argv) {
  using namespace bellforge::cli;
  const std::vector<std::string> args(argv + 1, argv + argc);
  Command command;
  try {
    command = parse_command(args);
  } catch (const HelpRequested& help) {
    std::cout << help.what();
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n(run with --help for options)\n";
    return 2;
  }
  try {
    const Execution result = execute(command);
    std::cout << result.output;
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
