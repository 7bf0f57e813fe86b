#include <iostream>

#include "chromham/cli.hh"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = chromham::run(args, std::cin);
  (outcome.exit_code == 2 ? std::cerr : std::cout) << outcome.payload;
  return outcome.exit_code;
}
