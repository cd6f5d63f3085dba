#pragma once

#include <string>
#include <utility>
#include <vector>

namespace swarmsim {

/// Standalone SVG horizontal bar chart of (label, value) pairs, bars sorted
/// by descending value, x axis spanning 0..max. No external references, so
/// the file renders anywhere.
std::string bar_chart_svg(const std::vector<std::pair<std::string, double>>& entries,
                          const std::string& title);

}  // namespace swarmsim
