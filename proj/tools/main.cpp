#include <iostream>

#include "rainbow/cli.hpp"

int main(int argc, char** argv) {
  return rainbow::cli::run(argc, argv, std::cout, std::cerr);
}
