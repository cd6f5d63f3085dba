#include "swarmsim/report_io.hpp"

#include <istream>
#include <ostream>

#include "swarmsim/design.hpp"
#include "swarmsim/errors.hpp"
#include "swarmsim/format.hpp"

namespace swarmsim {

Dataset dataset_from_records(const std::vector<RunRecord>& records) {
  Dataset data;
  data.n_rows = static_cast<int>(records.size());
  data.n_features = kFactorCount;
  data.x.reserve(records.size() * kFactorCount);
  data.y.reserve(records.size());
  for (const auto& rec : records) {
    for (int f = 0; f < kFactorCount; ++f)
      data.x.push_back(static_cast<std::uint8_t>((rec.point_id >> f) & 1));
    data.y.push_back(label_critical(rec.asrd) ? 1 : 0);
  }
  return data;
}

void write_stats_csv(std::ostream& out, const std::optional<SummaryStats>& stats) {
  out << "metric,value\n";
  out << "count," << (stats ? stats->count : 0) << '\n';
  const auto row = [&](const char* name, double SummaryStats::* field) {
    out << name << ',';
    if (stats) out << format_fixed(stats.value().*field, 6);
    out << '\n';
  };
  row("mean", &SummaryStats::mean);
  row("std", &SummaryStats::std);
  row("min", &SummaryStats::min);
  row("q1", &SummaryStats::q1);
  row("median", &SummaryStats::median);
  row("q3", &SummaryStats::q3);
  row("max", &SummaryStats::max);
}

void write_importance_csv(std::ostream& out, const ImportanceReport& report) {
  out << "factor,importance,rank\n";
  int rank = 1;
  for (const int feature : report.ranking) {
    out << kFactorNames[static_cast<std::size_t>(feature)] << ','
        << format_fixed(report.importance[static_cast<std::size_t>(feature)], 6)
        << ',' << rank << '\n';
    ++rank;
  }
}

std::vector<std::pair<std::string, double>> read_importance_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("importance csv: empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "factor,importance,rank")
    throw ConfigError("importance csv: unexpected header");

  std::vector<std::pair<std::string, double>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto first = line.find(',');
    const auto second = first == std::string::npos
                            ? std::string::npos
                            : line.find(',', first + 1);
    if (first == std::string::npos || second == std::string::npos)
      throw ConfigError("importance csv line " + std::to_string(line_no) +
                        ": expected 3 fields");
    const std::string factor(trim(line.substr(0, first)));
    double importance = 0.0;
    int rank = 0;
    if (factor.empty() ||
        !parse_double(line.substr(first + 1, second - first - 1), importance) ||
        !parse_int(line.substr(second + 1), rank) || importance < 0.0)
      throw ConfigError("importance csv line " + std::to_string(line_no) +
                        ": bad row");
    rows.emplace_back(factor, importance);
  }
  if (rows.empty()) throw ConfigError("importance csv: no data rows");
  return rows;
}

}  // namespace swarmsim
