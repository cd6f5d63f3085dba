#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "swarmsim/design.hpp"

namespace swarmsim {

/// One completed run of the sweep. 5120 of these for the default design.
struct RunRecord {
  long run_id = 0;
  int point_id = 0;
  int rep = 0;
  std::array<double, kFactorCount> factors{};  // resolved values, factor order
  std::uint64_t seed = 0;
  int ticks_run = 0;
  int remaining = 0;
  double asrd = 0.0;
  bool critical = false;  // asrd < 1
};

/// Per-run seed: a fixed hash of (base_seed, point_id, rep). The contract is
/// frozen so any single run can be reproduced without executing the sweep.
std::uint64_t run_seed(std::uint64_t base_seed, int point_id, int rep);

/// Executes reps runs for every design point. Records come back in
/// (point_id, rep) order no matter how many workers ran them; workers == 0
/// means hardware concurrency. A failing run aborts the sweep with the
/// offending (point_id, rep) named in the exception.
std::vector<RunRecord> run_sweep(const std::vector<DesignPoint>& design,
                                 int reps, std::uint64_t base_seed,
                                 int workers = 0);

inline constexpr std::string_view kRecordsCsvHeader =
    "run_id,point_id,rep,m,k,up,lw,bc,sd,qty,bg,b,seed,ticks_run,remaining,"
    "asrd,critical";

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records);

/// Parses a results CSV; throws ConfigError on a wrong header or a bad row.
std::vector<RunRecord> read_records_csv(std::istream& in);

}  // namespace swarmsim
