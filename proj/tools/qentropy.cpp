#include <iostream>

#include "qentropy/cli/commands.hpp"

int main(int argc, char** argv) {
  return qentropy::cli::run(argc, argv, std::cout, std::cerr);
}
