#include <iostream>
#include <string>
#include <vector>

#include "b2v_tools/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return b2v::tools::run_cli(args, std::cout, std::cerr);
}
