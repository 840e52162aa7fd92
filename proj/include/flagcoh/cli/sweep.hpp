#pragma once

// Sweep configuration: a flat file of `key = value` lines.
//
//   # comment
//   command = incidence chars
//   n = 3..4
//   d = 2; 3
//   prime = 2
//   compare = char2
//
// A value is a scalar, a `;`-separated list of alternatives, or an integer
// range `a..b`. Commas are literal so that `weights = 1,1,1,1` stays one
// value. The grid is the cartesian product in file order, last key fastest.
// A value of `true` becomes a bare flag and `false` omits it.

#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace flagcoh::cli {

struct SweepConfig {
  /// Subcommand words, e.g. {"incidence", "chars"}.
  std::vector<std::string> command;
  /// Parameter name and its alternatives, in file order.
  std::vector<std::pair<std::string, std::vector<std::string>>> axes;

  [[nodiscard]] std::size_t size() const;
  /// Command-line arguments of grid point `index` (canonical order).
  [[nodiscard]] std::vector<std::string> arguments(std::size_t index) const;
};

/// Throws std::invalid_argument with a line number on malformed input.
[[nodiscard]] SweepConfig parse_sweep_config(std::istream& in);

} // namespace flagcoh::cli
