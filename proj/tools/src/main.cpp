#include <iostream>
#include <string>
#include <vector>

#include "fakequad_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fakequad::cli::cli_main(args, std::cout, std::cerr);
}
