#include <iostream>

#include "gaidx_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gaidx::cli::run(args, std::cout, std::cerr);
}
