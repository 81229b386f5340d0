#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  frames::cli::Environment env;
  if (const char* prime = std::getenv("FRAMES_PRIME")) env.frames_prime = prime;
  return frames::cli::run_cli({argv + 1, argv + argc}, std::cout, std::cerr, env);
}
