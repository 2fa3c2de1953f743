#include <string>
#include <vector>
#include <iostream>

#include "lenslab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lenslab::cli::run(args, std::cout, std::cerr);
}
