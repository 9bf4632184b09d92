#include <iostream>

#include "affgr/cli.hpp"

int main(int argc, char** argv) {
  return affgr::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
