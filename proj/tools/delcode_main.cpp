#include <iostream>
#include <string>
#include <vector>

#include "delcode/cli.hpp"

int main(int argc, char **argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = delcode::cli::run(args);
  (result.exit_code == delcode::cli::kExitUsage ? std::cerr : std::cout) << result.report;
  return result.exit_code;
}
