#include <iostream>
#include <string>
#include <vector>

#include "riffle/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return riffle::cli::run(args, std::cout, std::cerr);
}
