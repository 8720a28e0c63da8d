#include <iostream>

#include "painleve_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return painleve::cli::run(args, std::cout, std::cerr);
}
