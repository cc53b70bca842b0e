#include <iostream>
#include <string>
#include <vector>

#include "wolfhp/clirun.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wolfhp::run_cli(args, std::cout, std::cerr);
}
