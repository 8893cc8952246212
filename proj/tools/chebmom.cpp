#include <iostream>
#include <string>
#include <vector>

#include "chebmom/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) {
    std::cerr << chebmom::cli::usage_text();
    return 2;
  }
  return chebmom::cli::run(args, std::cout, std::cerr);
}
