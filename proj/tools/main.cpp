#include <iostream>
#include <string>
#include <vector>

#include "polyhit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polyhit::run(args, std::cout, std::cerr);
}
