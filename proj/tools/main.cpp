#include <iostream>
#include <string>
#include <vector>

#include "tricgt/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  const auto result = tricgt::dispatch(args);
  (result.exit_code == 2 ? std::cerr : std::cout) << result.payload;
  return result.exit_code;
}
