#include <iostream>
#include <string>
#include <vector>

#include "extremes/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return extremes::run_cli(args, std::cout, std::cerr);
}
