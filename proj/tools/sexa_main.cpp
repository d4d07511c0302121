#include <iostream>
#include <string>
#include <vector>

#include "sexa/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  const auto result = sexa::cli::run(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
