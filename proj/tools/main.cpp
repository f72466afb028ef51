#include <iostream>
#include <string>
#include <vector>

#include "chenlie/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chenlie::cli::run(args, std::cout, std::cerr, std::cin);
}
