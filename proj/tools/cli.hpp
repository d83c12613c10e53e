#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace egs::cli {

// Stable exit codes.
enum Exit : int {
  ok = 0,
  refuted = 1,  // Refuted* verdicts, NotInSpan, failed checks
  parse_error = 2,
  validation_error = 3,
  trail_cap = 4,
  inconclusive = 5,
  unsupported = 6,
};

/// Runs `egs args...` (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace egs::cli
