#include <iostream>

#include "surfalg/cli.hpp"

int main(int argc, char** argv) {
  return surfalg::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
