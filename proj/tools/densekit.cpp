#include <iostream>
#include <string>
#include <vector>

#include "densekit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return densekit::run_cli(args, std::cout, std::cerr);
}
