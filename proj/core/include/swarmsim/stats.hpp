#pragma once

#include <cstddef>
#include <span>

namespace swarmsim {

/// Descriptive summary of a sample. Quartiles use linear interpolation
/// between closest ranks; std is the sample deviation (n - 1 denominator),
/// zero by convention for a singleton.
struct SummaryStats {
  std::size_t count = 0;
  double mean = 0.0;
  double std = 0.0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

/// Throws std::invalid_argument on an empty sample.
SummaryStats describe(std::span<const double> values);

/// A run is critical when the swarm did not fully survive.
inline bool label_critical(double asrd) noexcept { return asrd < 1.0; }

}  // namespace swarmsim
