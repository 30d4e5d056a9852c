#include "boxvas/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto out = boxvas::run_command(args);
  std::cout << out.stdout_text;
  std::cerr << out.stderr_text;
  return out.exit_code;
}
