#include "swarmsim/params.hpp"

#include <stdexcept>

namespace swarmsim {

std::optional<std::string> validate(const SimParams& p) {
  if (p.m < 1) return "m must be an integer >= 1";
  if (p.k < 1) return "k must be an integer >= 1";
  if (p.lw < 0.0) return "lw must be >= 0";
  if (p.up > 100.0) return "up must be <= 100";
  if (p.lw > p.up) return "lw must be <= up";
  if (p.bc < 0.0) return "bc must be >= 0";
  if (p.sd < 0.0) return "sd must be >= 0";
  if (p.qty < 1) return "qty must be an integer >= 1";
  if (p.bg < 0.0 || p.bg > 100.0) return "bg must be in [0, 100]";
  if (p.b < 0.0 || p.b > 100.0) return "b must be in [0, 100]";
  if (p.max_ticks < 1) return "max_ticks must be an integer >= 1";
  return std::nullopt;
}

void require_valid(const SimParams& p) {
  if (auto err = validate(p)) throw std::invalid_argument(*err);
}

}  // namespace swarmsim
