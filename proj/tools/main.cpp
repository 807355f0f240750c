#include <iostream>
#include <string>
#include <vector>

#include "toricchi/cli.hpp"

int main(int argc, char** argv) {
  return toricchi::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
