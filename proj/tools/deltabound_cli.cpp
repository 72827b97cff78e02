#include "deltabound/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = deltabound::cli::run(args);
  std::cout << result.payload;
  std::cerr << result.diagnostic;
  return result.exit_code;
}
