#include <iostream>
#include <string>
#include <vector>

#include "eta42/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return eta42::cli::run(args, std::cout, std::cerr);
}
