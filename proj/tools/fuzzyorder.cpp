#include <iostream>

#include "fuzzyorder/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fzo::cli::run(args, std::cout, std::cerr);
}
