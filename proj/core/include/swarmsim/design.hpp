#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swarmsim/params.hpp"

namespace swarmsim {

inline constexpr int kFactorCount = 9;

/// Canonical factor order. Bit i of a design point id selects factor i's
/// level, so the first factor varies fastest across consecutive ids.
inline constexpr std::array<std::string_view, kFactorCount> kFactorNames = {
    "m", "k", "up", "lw", "bc", "sd", "qty", "bg", "b"};

/// Index of a factor name, or -1.
int factor_index(std::string_view name);

/// Factor i of a parameter record, canonical order.
double factor_value(const SimParams& p, int factor);
void set_factor(SimParams& p, int factor, double value);

struct LevelPair {
  double low = 0.0;
  double high = 0.0;
};

/// The two screening levels per factor.
struct FactorLevels {
  std::array<LevelPair, kFactorCount> levels = {{
      {2, 9},     // m
      {2, 9},     // k
      {70, 90},   // up
      {25, 50},   // lw
      {10, 15},   // bc
      {0, 0.1},   // sd
      {50, 100},  // qty
      {50, 100},  // bg
      {30, 60},   // b
  }};
};

/// Error message naming the offending factor, or nullopt. Integer factors
/// (m, k, qty) must have integral levels, and low != high for every factor.
std::optional<std::string> validate(const FactorLevels& levels);

/// Parameter record for one corner of the design; seed and max_ticks keep
/// their defaults. point_id must lie in [0, 2^9).
SimParams resolve(const FactorLevels& levels, int point_id);

struct DesignPoint {
  int point_id = 0;
  std::array<bool, kFactorCount> high{};  // level bits, canonical factor order
  SimParams params;                       // resolved values, seed unset
};

/// All 2^9 = 512 corners in point_id order.
std::vector<DesignPoint> full_factorial(const FactorLevels& levels);

}  // namespace swarmsim
