#include "qnetmax/cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env_seed;
  if (const char* s = std::getenv("QNETMAX_SEED")) env_seed = s;
  return qnetmax::cli::run(args, std::cout, std::cerr, env_seed);
}
