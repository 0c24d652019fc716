#include <iostream>

#include "dispatch.hpp"

int main(int argc, char** argv) {
  return satlab::cli::dispatch(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
