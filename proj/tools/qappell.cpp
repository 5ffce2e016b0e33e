#include <iostream>
#include <string>
#include <vector>

#include "qappell/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qappell::run_cli(args, std::cout, std::cerr);
}
