#pragma once

#include <string>
#include <vector>

#include "report.hpp"

namespace comeasure {

// Exit codes: 0 success, 1 a check failed (witness in the report), 2
// malformed input or unusable arguments.
struct RunResult {
  int exit_code = 0;
  Report report;
  std::string format = "json";
};

RunResult run_command(const std::vector<std::string>& args);

}  // namespace comeasure
