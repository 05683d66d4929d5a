#include <iostream>
#include <vector>

#include "xcount/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return xcount::run_command(args, std::cout, std::cerr, &std::cin);
}
