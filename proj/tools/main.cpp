#include <iostream>
#include <string>
#include <vector>

#include "rs3/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rs3::cli::run(args, std::cout, std::cerr);
}
