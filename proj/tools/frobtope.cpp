#include <iostream>
#include <string>
#include <vector>

#include "frobtope/cli.hpp"

int main(int argc, char **argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = frobtope::cli::run_args(args);
  std::cout << result.output;
  if (!result.error.empty())
    std::cerr << result.error << '\n';
  return result.exit_code;
}
