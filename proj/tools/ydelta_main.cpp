#include <iostream>
#include <string>
#include <vector>

#include "ydelta/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ydelta::run_cli(args, std::cout, std::cerr);
}
