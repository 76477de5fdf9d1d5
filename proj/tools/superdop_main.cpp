#include <iostream>

#include "superdop/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return superdop::run_cli(args, std::cout, std::cerr);
}
