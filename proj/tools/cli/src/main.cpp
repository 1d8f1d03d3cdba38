#include <iostream>

#include "ptlocus/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ptlocus::cli::run(args, std::cout, std::cerr);
}
