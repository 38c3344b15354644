#include <iostream>

#include "pmindex/cli.hpp"

int main(int argc, char** argv) {
  return pmindex::run_cli(argc, argv, std::cout, std::cerr);
}
