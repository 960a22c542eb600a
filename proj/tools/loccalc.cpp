#include <iostream>
#include <string>
#include <vector>

#include "loccalc/job.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return loccalc::runCli(args, std::cout);
}
