#pragma once

#include <iosfwd>
#include <string>

#include "swarmsim/design.hpp"
#include "swarmsim/params.hpp"

namespace swarmsim {

/// Parsed run configuration. Factor keys (m, k, up, lw, bc, sd, qty, bg, b)
/// and the run options max_ticks and motion are recognized; anything missing
/// keeps its default. The seed is a command-line flag, never a config key.
struct RunConfig {
  SimParams params;
  bool motion = false;
};

/// key=value lines; blank lines and #-comments allowed. Unknown or duplicate
/// keys and bad values raise ConfigError naming the offending line.
RunConfig parse_run_config(std::istream& in);
RunConfig load_run_config(const std::string& path);  // IoError when unreadable

/// Levels file: `name=low,high`, one factor per line; unspecified factors
/// keep their defaults. Same error discipline as the run config.
FactorLevels parse_levels(std::istream& in);
FactorLevels load_levels(const std::string& path);

}  // namespace swarmsim
