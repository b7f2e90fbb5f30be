#include <iostream>

#include "omega3rb/cli.hpp"

int main(int argc, char** argv) {
  return omega3rb::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
