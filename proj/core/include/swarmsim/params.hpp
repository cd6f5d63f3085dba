#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace swarmsim {

/// One immutable parameter record per simulation run. Defaults are the low
/// screening levels plus the standard tick budget.
struct SimParams {
  int m = 2;            // attendance window length (ticks)
  int k = 2;            // predictors per drone
  double up = 70.0;     // upper SOC threshold (percent)
  double lw = 25.0;     // lower SOC threshold (percent)
  double bc = 10.0;     // mean SOC consumption per tick (percent)
  double sd = 0.0;      // consumption standard deviation (percent)
  int qty = 50;         // initial drone count
  double bg = 50.0;     // SOC gained per effective recharge (percent)
  double b = 30.0;      // station capacity, percent of currently alive drones
  std::uint64_t seed = 1;
  int max_ticks = 1500;
};

/// Error message naming the violated constraint, or nullopt when valid.
std::optional<std::string> validate(const SimParams& p);

/// Throws std::invalid_argument with the validate() message when invalid.
void require_valid(const SimParams& p);

}  // namespace swarmsim
