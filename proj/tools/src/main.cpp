#include <iostream>
#include <string>
#include <vector>

#include "bifurcato_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bifurcato::cli::run(args, std::cout, std::cerr);
}
