// Command-line front end. dispatch() never prints; the caller writes the
// payload to stdout (exit codes 0 and 1) or stderr (exit code 2).

#pragma once

#include <span>
#include <string>

namespace tricgt {

struct CommandResult {
  // 0 success or claim holds, 1 violation / distinguished / no solution,
  // 2 usage or parse error.
  int exit_code = 0;
  std::string payload;
};

// args[0] is the program name.
CommandResult dispatch(std::span<const std::string> args);

}  // namespace tricgt
