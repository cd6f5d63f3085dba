#include "swarmsim/sweep.hpp"

#include <atomic>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>

#include "swarmsim/engine.hpp"
#include "swarmsim/errors.hpp"
#include "swarmsim/format.hpp"
#include "swarmsim/stats.hpp"

namespace swarmsim {

std::uint64_t run_seed(std::uint64_t base_seed, int point_id, int rep) {
  return derive_seed(base_seed, static_cast<std::uint64_t>(point_id),
                     static_cast<std::uint64_t>(rep));
}

namespace {

RunRecord execute_one(const DesignPoint& point, int rep, int reps,
                      std::uint64_t base_seed) {
  RunRecord rec;
  rec.point_id = point.point_id;
  rec.rep = rep;
  rec.run_id = static_cast<long>(point.point_id) * reps + rep;
  for (int f = 0; f < kFactorCount; ++f)
    rec.factors[static_cast<std::size_t>(f)] = factor_value(point.params, f);
  rec.seed = run_seed(base_seed, point.point_id, rep);

  SimParams params = point.params;
  params.seed = rec.seed;
  const SimResult result = simulate(params);
  rec.ticks_run = result.ticks_run;
  rec.remaining = result.remaining;
  rec.asrd = result.asrd;
  rec.critical = label_critical(result.asrd);
  return rec;
}

}  // namespace

std::vector<RunRecord> run_sweep(const std::vector<DesignPoint>& design,
                                 int reps, std::uint64_t base_seed,
                                 int workers) {
  if (reps < 1) throw ConfigError("reps must be >= 1");
  if (workers < 0) throw ConfigError("workers must be >= 0");
  if (workers == 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
  }

  const std::size_t total = design.size() * static_cast<std::size_t>(reps);
  std::vector<RunRecord> records(total);

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::string error_message;

  const auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t job = next.fetch_add(1, std::memory_order_relaxed);
      if (job >= total) return;
      const auto point_index = job / static_cast<std::size_t>(reps);
      const int rep = static_cast<int>(job % static_cast<std::size_t>(reps));
      const DesignPoint& point = design[point_index];
      try {
        records[job] = execute_one(point, rep, reps, base_seed);
      } catch (const std::exception& e) {
        const std::scoped_lock lock(error_mutex);
        if (!failed.exchange(true)) {
          error_message = "run failed at point_id=" +
                          std::to_string(point.point_id) +
                          " rep=" + std::to_string(rep) + ": " + e.what();
        }
        return;
      }
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  if (failed.load()) throw std::runtime_error(error_message);
  return records;
}

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << kRecordsCsvHeader << '\n';
  for (const auto& rec : records) {
    out << rec.run_id << ',' << rec.point_id << ',' << rec.rep;
    for (const double v : rec.factors) out << ',' << format_number(v);
    out << ',' << rec.seed << ',' << rec.ticks_run << ',' << rec.remaining
        << ',' << format_fixed(rec.asrd, 6) << ',' << (rec.critical ? 1 : 0)
        << '\n';
  }
}

namespace {

std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

[[noreturn]] void bad_row(std::size_t line_no, const std::string& what) {
  throw ConfigError("results csv line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::vector<RunRecord> read_records_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("results csv: empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kRecordsCsvHeader)
    throw ConfigError("results csv: unexpected header");

  std::vector<RunRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 17) bad_row(line_no, "expected 17 fields");

    RunRecord rec;
    double run_id = 0;
    if (!parse_double(fields[0], run_id)) bad_row(line_no, "bad run_id");
    rec.run_id = static_cast<long>(run_id);
    if (!parse_int(fields[1], rec.point_id)) bad_row(line_no, "bad point_id");
    if (rec.point_id < 0 || rec.point_id >= (1 << kFactorCount))
      bad_row(line_no, "point_id out of range");
    if (!parse_int(fields[2], rec.rep)) bad_row(line_no, "bad rep");
    for (int f = 0; f < kFactorCount; ++f)
      if (!parse_double(fields[static_cast<std::size_t>(3 + f)],
                        rec.factors[static_cast<std::size_t>(f)]))
        bad_row(line_no, "bad factor value");
    if (!parse_u64(fields[12], rec.seed)) bad_row(line_no, "bad seed");
    if (!parse_int(fields[13], rec.ticks_run)) bad_row(line_no, "bad ticks_run");
    if (!parse_int(fields[14], rec.remaining)) bad_row(line_no, "bad remaining");
    if (!parse_double(fields[15], rec.asrd)) bad_row(line_no, "bad asrd");
    int critical = 0;
    if (!parse_int(fields[16], critical) || (critical != 0 && critical != 1))
      bad_row(line_no, "bad critical flag");
    rec.critical = critical == 1;
    records.push_back(rec);
  }
  return records;
}

}  // namespace swarmsim
