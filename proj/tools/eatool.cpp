#include <iostream>

#include "eat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eat::run_cli(args, std::cout, std::cerr);
}
