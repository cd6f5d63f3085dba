#include "swarmsim/design.hpp"

#include <cmath>
#include <stdexcept>

namespace swarmsim {

namespace {

bool is_integer_factor(int factor) {
  return factor == 0 || factor == 1 || factor == 6;  // m, k, qty
}

bool integral(double v) { return v == std::floor(v); }

}  // namespace

int factor_index(std::string_view name) {
  for (int i = 0; i < kFactorCount; ++i)
    if (kFactorNames[static_cast<std::size_t>(i)] == name) return i;
  return -1;
}

double factor_value(const SimParams& p, int factor) {
  switch (factor) {
    case 0: return p.m;
    case 1: return p.k;
    case 2: return p.up;
    case 3: return p.lw;
    case 4: return p.bc;
    case 5: return p.sd;
    case 6: return p.qty;
    case 7: return p.bg;
    case 8: return p.b;
    default: throw std::out_of_range("factor index");
  }
}

void set_factor(SimParams& p, int factor, double value) {
  switch (factor) {
    case 0: p.m = static_cast<int>(value); break;
    case 1: p.k = static_cast<int>(value); break;
    case 2: p.up = value; break;
    case 3: p.lw = value; break;
    case 4: p.bc = value; break;
    case 5: p.sd = value; break;
    case 6: p.qty = static_cast<int>(value); break;
    case 7: p.bg = value; break;
    case 8: p.b = value; break;
    default: throw std::out_of_range("factor index");
  }
}

std::optional<std::string> validate(const FactorLevels& levels) {
  for (int i = 0; i < kFactorCount; ++i) {
    const auto& [low, high] = levels.levels[static_cast<std::size_t>(i)];
    const std::string name(kFactorNames[static_cast<std::size_t>(i)]);
    if (low == high) return name + ": low and high levels must differ";
    if (is_integer_factor(i) && (!integral(low) || !integral(high)))
      return name + ": levels must be integers";
  }
  return std::nullopt;
}

SimParams resolve(const FactorLevels& levels, int point_id) {
  if (point_id < 0 || point_id >= (1 << kFactorCount))
    throw std::out_of_range("point_id must lie in [0, 512)");
  SimParams p;
  for (int i = 0; i < kFactorCount; ++i) {
    const auto& pair = levels.levels[static_cast<std::size_t>(i)];
    set_factor(p, i, (point_id >> i) & 1 ? pair.high : pair.low);
  }
  return p;
}

std::vector<DesignPoint> full_factorial(const FactorLevels& levels) {
  if (auto err = validate(levels)) throw std::invalid_argument(*err);
  std::vector<DesignPoint> design;
  design.reserve(1 << kFactorCount);
  for (int id = 0; id < (1 << kFactorCount); ++id) {
    DesignPoint point;
    point.point_id = id;
    for (int i = 0; i < kFactorCount; ++i)
      point.high[static_cast<std::size_t>(i)] = (id >> i) & 1;
    point.params = resolve(levels, id);
    design.push_back(point);
  }
  return design;
}

}  // namespace swarmsim
