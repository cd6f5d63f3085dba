#pragma once

#include <span>
#include <vector>

#include "swarmsim/battery.hpp"
#include "swarmsim/params.hpp"
#include "swarmsim/policy.hpp"
#include "swarmsim/rng.hpp"
#include "swarmsim/strategy.hpp"

namespace swarmsim {

/// Ring buffer of the last 2m per-tick recharge-attempt counts as broadcast
/// by the base station, newest first. Pre-filled at construction with uniform
/// integers in [0, qty] so predictors have a full window from tick zero.
class AttendanceHistory {
 public:
  AttendanceHistory(int m, int qty, RngStream& rng);

  /// Newest count in, oldest out; length stays exactly 2m.
  void push(int attempts);

  /// All 2m entries, newest first. Stored as doubles for the predictors.
  std::span<const double> values() const { return values_; }

  /// The m most recent entries, the prediction window.
  std::span<const double> recent() const {
    return std::span<const double>(values_).first(values_.size() / 2);
  }

 private:
  std::vector<double> values_;
};

struct Drone {
  int id = 0;
  SocValue soc = kFullSoc;
  PredictorEnsemble ensemble;
  bool alive = true;
  double x = 0.0, y = 0.0;  // cosmetic random-walk position, motion option only
};

struct SimOptions {
  bool record_trace = false;  // keep per-tick series in the result
  bool motion = false;        // 2D random walk on a separate stream; it never
                              // touches decisions or energy
};

/// Full state of one running simulation. One run is strictly single-threaded
/// and owns everything here, including its private random stream.
struct SimState {
  explicit SimState(const SimParams& params, const SimOptions& opts = {});

  SimParams params;
  SimOptions opts;
  int tick = 0;
  int alive_count = 0;
  RngStream rng;         // decisions, service lottery, consumption
  RngStream motion_rng;  // cosmetic walk only
  AttendanceHistory history;  // prefilled from rng, so declared after it
  std::vector<Drone> drones;

  // per-tick scratch, kept here to avoid reallocation
  std::vector<int> attendee_scratch;
  std::vector<char> served_scratch;
};

struct TickStats {
  int attempts = 0;     // drones that tried to recharge (served or not)
  int served = 0;       // drones that actually got a slot
  int alive = 0;        // alive after this tick's deaths
  double mean_soc = 0;  // over drones alive at tick end; 0 when none
};

struct SimResult {
  int remaining = 0;
  int ticks_run = 0;
  double asrd = 0.0;
  // Per-tick series, filled when tracing is on; index 0 is tick 1.
  std::vector<int> attendance_series;
  std::vector<int> served_series;
  std::vector<int> alive_series;
  std::vector<double> mean_soc_series;
};

/// Station slots this tick: floor(b percent of the currently alive swarm).
int station_capacity(double b_percent, int alive);

/// Surviving fraction of the initial swarm; qty must be >= 1.
double asrd(int remaining, int qty);

/// Advances exactly one tick:
///   1. every alive drone re-selects its best strategy against the current
///      history, predicts attendance from the most recent m entries and
///      decides via the charger-threshold rule, all against the capacity
///      computed from the alive count at tick start;
///   2. if attempts exceed capacity, a uniformly random subset of that size
///      is served; served drones recharge and consume nothing this tick,
///      every other alive drone consumes;
///   3. the attempt count (not the served count) enters the history;
///   4. drones at soc <= 0 die and leave all future phases;
///   5. the tick counter advances.
TickStats step(SimState& state);

/// Runs until no drone is alive or max_ticks is reached.
SimResult simulate(const SimParams& params, const SimOptions& opts = {});

}  // namespace swarmsim
