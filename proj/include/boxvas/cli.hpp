#pragma once

#include <string>
#include <vector>

namespace boxvas {

struct CliOutcome {
  int exit_code = 0;
  std::string stdout_text;  // one JSON object, or help text
  std::string stderr_text;  // human summary
};

// args excludes the program name. Exit codes: 0 success, 2 parse or usage,
// 3 precondition, 4 resource budget, 5 internal (unverified witness).
CliOutcome run_command(const std::vector<std::string>& args);

}  // namespace boxvas
