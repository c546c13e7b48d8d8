#pragma once

#include <optional>
#include <string>
#include <vector>

#include "problem_io.hpp"

namespace bethe::app {

// Command-line values that replace the ones in the problem file.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<int> samples;
};

struct RunResult {
  json report;
  int exit_code = 0;  // 0 pass, 1 check failure, 2 input error
};

const std::vector<std::string>& command_names();

RunResult run_command(const std::string& command, const json& problem, const Overrides& o = {});

}  // namespace bethe::app
