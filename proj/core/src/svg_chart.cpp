#include "swarmsim/svg_chart.hpp"

#include <algorithm>
#include <sstream>

#include "swarmsim/format.hpp"

namespace swarmsim {

namespace {

constexpr double kLabelWidth = 72.0;
constexpr double kPlotWidth = 520.0;
constexpr double kBarHeight = 22.0;
constexpr double kBarGap = 10.0;
constexpr double kTopMargin = 48.0;
constexpr double kBottomMargin = 36.0;
constexpr double kRightMargin = 64.0;

std::string escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) { return format_fixed(v, 2); }

}  // namespace

std::string bar_chart_svg(const std::vector<std::pair<std::string, double>>& entries,
                          const std::string& title) {
  std::vector<std::pair<std::string, double>> sorted(entries);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });

  double max_value = 0.0;
  for (const auto& [label, value] : sorted) max_value = std::max(max_value, value);
  const double axis_max = max_value > 0.0 ? max_value : 1.0;

  const double n = static_cast<double>(sorted.size());
  const double width = kLabelWidth + kPlotWidth + kRightMargin;
  const double height = kTopMargin + n * (kBarHeight + kBarGap) + kBottomMargin;
  const double axis_y = kTopMargin + n * (kBarHeight + kBarGap);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width)
      << ' ' << num(height) << "\">\n";
  svg << "  <style>text{font-family:sans-serif;font-size:12px;fill:#222;}"
         ".title{font-size:15px;font-weight:bold;}</style>\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "  <text class=\"title\" x=\"" << num(kLabelWidth) << "\" y=\"24\">"
      << escape(title) << "</text>\n";

  double y = kTopMargin;
  for (const auto& [label, value] : sorted) {
    const double bar = kPlotWidth * (value / axis_max);
    svg << "  <text x=\"" << num(kLabelWidth - 8.0) << "\" y=\""
        << num(y + kBarHeight - 6.0) << "\" text-anchor=\"end\">"
        << escape(label) << "</text>\n";
    svg << "  <rect class=\"bar\" x=\"" << num(kLabelWidth) << "\" y=\""
        << num(y) << "\" width=\"" << num(bar) << "\" height=\""
        << num(kBarHeight) << "\" fill=\"#4682b4\"/>\n";
    svg << "  <text x=\"" << num(kLabelWidth + bar + 6.0) << "\" y=\""
        << num(y + kBarHeight - 6.0) << "\">" << format_fixed(value, 4)
        << "</text>\n";
    y += kBarHeight + kBarGap;
  }

  // axis with quarter ticks
  svg << "  <line x1=\"" << num(kLabelWidth) << "\" y1=\"" << num(axis_y)
      << "\" x2=\"" << num(kLabelWidth + kPlotWidth) << "\" y2=\""
      << num(axis_y) << "\" stroke=\"#222\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double frac = static_cast<double>(i) / 4.0;
    const double x = kLabelWidth + kPlotWidth * frac;
    svg << "  <line x1=\"" << num(x) << "\" y1=\"" << num(axis_y) << "\" x2=\""
        << num(x) << "\" y2=\"" << num(axis_y + 4.0) << "\" stroke=\"#222\"/>\n";
    svg << "  <text x=\"" << num(x) << "\" y=\"" << num(axis_y + 18.0)
        << "\" text-anchor=\"middle\">" << format_fixed(axis_max * frac, 3)
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace swarmsim
