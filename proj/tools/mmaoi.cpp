#include <iostream>
#include <string>
#include <vector>

#include "mmaoi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mmaoi::cli::run(args, std::cout, std::cerr);
}
