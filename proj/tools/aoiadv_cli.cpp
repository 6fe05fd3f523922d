#include <iostream>
#include <string>
#include <vector>

#include "aoiadv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return aoiadv::cli::run(args, std::cout, std::cerr);
}
