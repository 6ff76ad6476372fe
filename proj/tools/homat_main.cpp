#include <iostream>
#include <string>
#include <vector>

#include "homat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return homat::run_cli(args, std::cout, std::cerr);
}
