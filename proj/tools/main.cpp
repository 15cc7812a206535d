#include <iostream>
#include <vector>

#include "sepcrit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sepcrit::run_cli(args, std::cout, std::cerr);
}
