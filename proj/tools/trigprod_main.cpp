#include <string>
#include <vector>

#include "trigprod/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return trigprod::cli::run(args);
}
