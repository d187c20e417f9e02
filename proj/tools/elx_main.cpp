#include <iostream>

#include "elx/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return elx::cli::run(args, std::cout, std::cerr);
}
