#include <iostream>

#include "complementa/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return complementa::run(args, std::cout, std::cerr);
}
