#include <iostream>

#include "triwidth/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return triwidth::run(args, std::cout);
}
