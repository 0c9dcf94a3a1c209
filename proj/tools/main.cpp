#include <iostream>

#include "cyclo4seq/cli.hpp"

int main(int argc, char** argv) {
  return cyclo4seq::cli_main(argc, argv, std::cout, std::cerr);
}
