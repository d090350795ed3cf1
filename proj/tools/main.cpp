#include <iostream>
#include <string>
#include <vector>

#include "realbott/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return realbott::execute(args, std::cout, std::cerr);
}
