#include <iostream>

#include "reeslab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return reeslab::run_cli(args, std::cout, std::cerr);
}
