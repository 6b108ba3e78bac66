#include <iostream>
#include <string>
#include <vector>

#include "cpt/report.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cpt::run_command(args, std::cout, std::cerr);
}
