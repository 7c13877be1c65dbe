#include <iostream>

#include "unimon/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return unimon::cli::run(args, std::cout, std::cerr);
}
