#include <iostream>
#include <string>
#include <vector>

#include "lqnash/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lqnash::run_cli(args, std::cout, std::cerr);
}
