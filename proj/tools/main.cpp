#include <iostream>

#include "deloop/cli.hpp"

int main(int argc, char** argv) {
  return deloop::cli::run_command({argv + 1, argv + argc}, std::cout, std::cerr);
}
