#include <iostream>
#include <string>
#include <vector>

#include "krasner_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return krasner::cli::run(args, std::cout, std::cerr);
}
