#include <iostream>

#include "srtrunc_cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return srtrunc::cli::run(args, std::cout, std::cerr);
}
