#include <iostream>
#include <string>
#include <vector>

#include "covrough/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return covrough::cli::run(args, std::cout, std::cerr);
}
