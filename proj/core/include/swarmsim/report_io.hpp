#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swarmsim/forest.hpp"
#include "swarmsim/stats.hpp"
#include "swarmsim/sweep.hpp"

namespace swarmsim {

/// Feature matrix for the forest: the nine factor levels of each run, decoded
/// from its point_id bits; y is the critical label recomputed from asrd.
Dataset dataset_from_records(const std::vector<RunRecord>& records);

/// `metric,value` rows, one per summary field. nullopt writes count 0 and
/// empty metrics (the no-critical-runs case).
void write_stats_csv(std::ostream& out, const std::optional<SummaryStats>& stats);

/// `factor,importance,rank` rows in descending-importance order.
void write_importance_csv(std::ostream& out, const ImportanceReport& report);

/// Parses an importance CSV back into (factor, importance) pairs, input
/// order. Throws ConfigError on malformed content.
std::vector<std::pair<std::string, double>> read_importance_csv(std::istream& in);

}  // namespace swarmsim
