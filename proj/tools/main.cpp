#include <iostream>

#include "hyptorsion/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hyptorsion::cli::run(args, std::cout, std::cerr);
}
