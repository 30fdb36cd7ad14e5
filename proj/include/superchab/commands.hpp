#pragma once

#include <string>
#include <vector>

#include "superchab/io.hpp"

namespace superchab {

enum ExitCode : int { kExitOk = 0, kExitHypothesis = 2, kExitParse = 3, kExitVerification = 4 };

struct CommandResult {
  Json json;
  int exit_code = kExitOk;
  std::string summary;  // one human-readable line
};

// genus | prime | bound | analyze | search | verify
CommandResult run_command(const std::string& command, const CurveInput& input);
// Parses first; every error becomes a JSON error object and an exit code.
CommandResult run_text(const std::string& command, const std::string& text);
// One result per line, in input order.
std::vector<CommandResult> run_batch(const std::string& command, const std::vector<std::string>& lines,
                                     unsigned threads = 0);

const std::vector<std::string>& command_names();

}  // namespace superchab
