#include <iostream>
#include <string>
#include <vector>

#include "rideshare/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rideshare::RunCli(args, std::cout, std::cerr);
}
