// Command-line entry point; all logic lives in the library so the driver
// can be exercised directly by the test suite.
#include <iostream>
#include <string>
#include <vector>

#include "ellq/report.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ellq::run_command(args, std::cout, std::cerr);
}
