#include <iostream>
#include <string>
#include <vector>

#include "qiquad/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return qiquad::cli::run(args, std::cout, std::cerr);
}
