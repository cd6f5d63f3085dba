#pragma once

namespace swarmsim {

enum class Decision { AttemptRecharge, Work };

/// Charger-threshold rule: below lw always attempt, above up never attempt,
/// and in between trust the predictor against the station's absolute
/// capacity (strict less-than; a prediction equal to capacity means work).
inline Decision ct_decide(double soc, double lw, double up, double predicted,
                          int capacity_abs) noexcept {
  if (soc < lw) return Decision::AttemptRecharge;
  if (soc > up) return Decision::Work;
  return predicted < static_cast<double>(capacity_abs)
             ? Decision::AttemptRecharge
             : Decision::Work;
}

}  // namespace swarmsim
