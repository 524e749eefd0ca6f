#include <iostream>
#include <string>
#include <vector>

#include "tropgame_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return tropgame::cli::run(args, std::cout, std::cerr);
}
