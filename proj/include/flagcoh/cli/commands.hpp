#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "flagcoh/cli/report.hpp"

namespace flagcoh::cli {

/// Runs the command line `args` (program name excluded). Human-readable
/// output goes to `out`, usage and error messages to `err`.
/// Returns 0 when every comparison agrees, 2 when some comparison disagrees
/// and 1 on usage, parameter or runtime errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses and executes one non-sweep command, returning its report. Throws
/// std::invalid_argument on usage errors.
[[nodiscard]] Report collect(const std::vector<std::string>& args);

} // namespace flagcoh::cli
