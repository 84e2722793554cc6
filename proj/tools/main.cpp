#include <iostream>
#include <string>
#include <vector>

#include "yang/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return yang::cli::run(args, std::cout, std::cerr);
}
