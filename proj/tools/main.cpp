#include <iostream>

#include "potentia/cli.hpp"

int main(int argc, char** argv) {
  return potentia::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
