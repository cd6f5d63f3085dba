#pragma once

#include <stdexcept>

namespace swarmsim {

/// Invalid content in a user-supplied file or option (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Filesystem failure: file missing, unreadable, unwritable (CLI exit code 1).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace swarmsim
