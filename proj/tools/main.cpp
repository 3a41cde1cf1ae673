#include <iostream>
#include <string>
#include <vector>

#include "wirelogic/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wirelogic::cli::run(args, std::cout, std::cerr);
}
