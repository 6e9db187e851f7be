#include <iostream>
#include <vector>

#include "mignotte/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mignotte::cli::run(args, std::cout, std::cerr);
}
