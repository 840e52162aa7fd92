#include <iostream>
#include <string>
#include <vector>

#include "flagcoh/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return flagcoh::cli::run(args, std::cout, std::cerr);
}
