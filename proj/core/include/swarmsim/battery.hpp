#pragma once

#include <algorithm>

#include "swarmsim/rng.hpp"

namespace swarmsim {

/// Battery state of charge in percent. A drone is alive iff soc > 0; every
/// update keeps soc <= 100.
using SocValue = double;

inline constexpr double kFullSoc = 100.0;

/// One tick of consumption: a Normal(bc, sd) draw, clamped at zero so a lucky
/// draw can never charge the battery. The result may be <= 0; death is the
/// caller's call. With sd == 0 the decrement is exactly bc.
inline SocValue consume_battery(SocValue soc, double bc, double sd,
                                RngStream& rng) noexcept {
  const double draw = rng.normal(bc, sd);
  return soc - std::max(0.0, draw);
}

/// Hot-swap recharge within one tick: gain bg percent, capped at full.
inline SocValue recharge(SocValue soc, double bg) noexcept {
  return std::min(kFullSoc, soc + bg);
}

}  // namespace swarmsim
