#include <iostream>
#include <string>
#include <vector>

#include "newtonspec/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return newtonspec::cli::run(args, std::cout, std::cerr);
}
