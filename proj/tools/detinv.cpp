#include <iostream>
#include <string>
#include <vector>

#include "detinv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return detinv::cli::run(args, std::cout, std::cerr);
}
