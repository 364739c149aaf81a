#include <iostream>
#include <string>
#include <vector>

#include "mintb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mintb::cli::run(args, std::cin, std::cout, std::cerr);
}
