#include <iostream>
#include <string>
#include <vector>

#include "b3img/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return b3img::run_cli(args, std::cout, std::cerr);
}
