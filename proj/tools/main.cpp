#include <string>
#include <vector>

#include "cli_lib.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return attenuant_cli::run_cli(args);
}
