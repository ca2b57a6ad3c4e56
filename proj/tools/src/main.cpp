#include <iostream>
#include <string>
#include <vector>

#include "mgcli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mgcli::run(args, std::cin, std::cout, std::cerr);
}
