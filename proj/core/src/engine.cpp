#include "swarmsim/engine.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace swarmsim {

namespace {

constexpr std::uint64_t kMotionStreamTag = 0x6d6f7469;  // keeps the walk off the decision stream
constexpr double kFieldSize = 100.0;

double wrap(double v) {
  while (v < 0.0) v += kFieldSize;
  while (v >= kFieldSize) v -= kFieldSize;
  return v;
}

void random_walk(SimState& st) {
  for (auto& d : st.drones) {
    if (!d.alive) continue;
    const double heading = st.motion_rng.uniform01() * 2.0 * std::numbers::pi;
    d.x = wrap(d.x + std::cos(heading));
    d.y = wrap(d.y + std::sin(heading));
  }
}

}  // namespace

AttendanceHistory::AttendanceHistory(int m, int qty, RngStream& rng) {
  values_.resize(2 * static_cast<std::size_t>(m));
  for (auto& v : values_)
    v = static_cast<double>(rng.uniform_int(static_cast<std::uint64_t>(qty) + 1));
}

void AttendanceHistory::push(int attempts) {
  for (std::size_t i = values_.size() - 1; i > 0; --i) values_[i] = values_[i - 1];
  values_[0] = static_cast<double>(attempts);
}

SimState::SimState(const SimParams& p, const SimOptions& o)
    : params(p),
      opts(o),
      rng((require_valid(p), p.seed)),
      motion_rng(derive_seed(p.seed, kMotionStreamTag)),
      history(p.m, p.qty, rng) {
  // Draw order is part of the determinism contract: the history prefill comes
  // first (member order above), then each drone's k strategies in id order.
  drones.reserve(static_cast<std::size_t>(p.qty));
  for (int id = 0; id < p.qty; ++id) {
    Drone d;
    d.id = id;
    d.ensemble = random_ensemble(p.k, p.m, rng);
    if (opts.motion) {
      d.x = motion_rng.uniform01() * kFieldSize;
      d.y = motion_rng.uniform01() * kFieldSize;
    }
    drones.push_back(std::move(d));
  }
  alive_count = p.qty;
  served_scratch.assign(static_cast<std::size_t>(p.qty), 0);
  attendee_scratch.reserve(static_cast<std::size_t>(p.qty));
}

int station_capacity(double b_percent, int alive) {
  if (alive < 0) throw std::invalid_argument("alive count must be >= 0");
  return static_cast<int>(std::floor(b_percent * static_cast<double>(alive) / 100.0));
}

double asrd(int remaining, int qty) {
  if (qty < 1) throw std::invalid_argument("qty must be an integer >= 1");
  if (remaining < 0 || remaining > qty)
    throw std::invalid_argument("remaining must lie in [0, qty]");
  return static_cast<double>(remaining) / static_cast<double>(qty);
}

TickStats step(SimState& st) {
  const SimParams& p = st.params;
  const int capacity = station_capacity(p.b, st.alive_count);
  const auto hist = st.history.values();
  const auto recent = st.history.recent();
  const double population = static_cast<double>(p.qty);

  auto& attendees = st.attendee_scratch;
  attendees.clear();
  for (auto& d : st.drones) {
    if (!d.alive) continue;
    const int best = select_best_strategy(d.ensemble, hist, population);
    const double predicted =
        predict_attendance(d.ensemble.strategies[best], recent, population);
    if (ct_decide(d.soc, p.lw, p.up, predicted, capacity) ==
        Decision::AttemptRecharge)
      attendees.push_back(d.id);
  }
  const int attempts = static_cast<int>(attendees.size());

  // Over capacity: serve a uniformly random subset (partial Fisher-Yates, the
  // only tick phase that draws from the stream besides consumption).
  int served_count = attempts;
  if (attempts > capacity) {
    served_count = capacity;
    for (int i = 0; i < capacity; ++i) {
      const auto j = static_cast<std::size_t>(i) +
                     st.rng.uniform_int(attendees.size() - static_cast<std::size_t>(i));
      std::swap(attendees[static_cast<std::size_t>(i)], attendees[j]);
    }
  }
  auto& served = st.served_scratch;
  std::fill(served.begin(), served.end(), 0);
  for (int i = 0; i < served_count; ++i)
    served[static_cast<std::size_t>(attendees[static_cast<std::size_t>(i)])] = 1;

  // Consumption draws happen in drone id order, never in lottery order.
  for (auto& d : st.drones) {
    if (!d.alive) continue;
    if (served[static_cast<std::size_t>(d.id)])
      d.soc = recharge(d.soc, p.bg);
    else
      d.soc = consume_battery(d.soc, p.bc, p.sd, st.rng);
  }

  st.history.push(attempts);

  int alive = 0;
  double soc_sum = 0.0;
  for (auto& d : st.drones) {
    if (!d.alive) continue;
    if (d.soc <= 0.0) {
      d.alive = false;
      continue;
    }
    ++alive;
    soc_sum += d.soc;
  }
  st.alive_count = alive;

  if (st.opts.motion) random_walk(st);

  ++st.tick;
  return TickStats{attempts, served_count, alive,
                   alive > 0 ? soc_sum / alive : 0.0};
}

SimResult simulate(const SimParams& params, const SimOptions& opts) {
  SimState st(params, opts);
  SimResult result;
  if (opts.record_trace) {
    result.attendance_series.reserve(static_cast<std::size_t>(params.max_ticks));
    result.served_series.reserve(static_cast<std::size_t>(params.max_ticks));
    result.alive_series.reserve(static_cast<std::size_t>(params.max_ticks));
    result.mean_soc_series.reserve(static_cast<std::size_t>(params.max_ticks));
  }
  while (st.alive_count > 0 && st.tick < params.max_ticks) {
    const TickStats t = step(st);
    if (opts.record_trace) {
      result.attendance_series.push_back(t.attempts);
      result.served_series.push_back(t.served);
      result.alive_series.push_back(t.alive);
      result.mean_soc_series.push_back(t.mean_soc);
    }
  }
  result.remaining = st.alive_count;
  result.ticks_run = st.tick;
  result.asrd = asrd(result.remaining, params.qty);
  return result;
}

}  // namespace swarmsim
