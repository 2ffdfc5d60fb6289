#include <iostream>

#include "gsparse/cli.hpp"

int main(int argc, char* argv[]) {
  return gsparse::cli::run_cli(argc, argv, std::cout, std::cerr);
}
