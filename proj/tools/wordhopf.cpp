#include <iostream>

#include "whopf/cli.hpp"

int main(int argc, char** argv) {
  return whopf::run_cli(argc, argv, std::cout, std::cerr);
}
