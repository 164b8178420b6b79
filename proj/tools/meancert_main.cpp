#include <iostream>

#include "meancert/cli.hpp"

int main(int argc, char** argv) {
  return meancert::run_cli(argc, argv, std::cout, std::cerr);
}
