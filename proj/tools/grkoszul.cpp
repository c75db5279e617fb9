#include <iostream>

#include "grkoszul/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return grk::run_cli(args, std::cout, std::cerr);
}
