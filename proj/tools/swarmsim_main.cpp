// Command-line front end: simulate | sweep | analyze | report.
//
// Exit codes: 0 success, 1 I/O failure, 2 invalid configuration or flags.
// Every command is deterministic given its flags; all randomness flows from
// explicit --seed values, never from the clock.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "swarmsim/config_file.hpp"
#include "swarmsim/design.hpp"
#include "swarmsim/engine.hpp"
#include "swarmsim/errors.hpp"
#include "swarmsim/format.hpp"
#include "swarmsim/report_io.hpp"
#include "swarmsim/stats.hpp"
#include "swarmsim/svg_chart.hpp"
#include "swarmsim/sweep.hpp"

namespace {

using namespace swarmsim;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  return in;
}

constexpr std::string_view kSingleRunHeader =
    "m,k,up,lw,bc,sd,qty,bg,b,seed,ticks_run,remaining,asrd,critical";

int cmd_simulate(const std::string& config_path, std::uint64_t seed,
                 const std::string& out_path, const std::string& trace_path) {
  RunConfig config = load_run_config(config_path);
  config.params.seed = seed;

  SimOptions opts;
  opts.record_trace = !trace_path.empty();
  opts.motion = config.motion;
  const SimResult result = simulate(config.params, opts);

  std::ostringstream row;
  row << kSingleRunHeader << '\n';
  for (int f = 0; f < kFactorCount; ++f)
    row << format_number(factor_value(config.params, f)) << ',';
  row << seed << ',' << result.ticks_run << ',' << result.remaining << ','
      << format_fixed(result.asrd, 6) << ','
      << (label_critical(result.asrd) ? 1 : 0) << '\n';
  write_file(out_path, row.str());

  if (!trace_path.empty()) {
    std::ostringstream trace;
    trace << "tick,alive,attempts,served,mean_soc\n";
    for (std::size_t i = 0; i < result.attendance_series.size(); ++i) {
      trace << (i + 1) << ',' << result.alive_series[i] << ','
            << result.attendance_series[i] << ',' << result.served_series[i]
            << ',' << format_fixed(result.mean_soc_series[i], 6) << '\n';
    }
    write_file(trace_path, trace.str());
  }
  return 0;
}

int cmd_sweep(const std::string& levels_path, int reps, std::uint64_t seed,
              const std::string& out_path, int workers) {
  if (reps < 1) throw ConfigError("reps must be >= 1");
  if (workers < 0) throw ConfigError("workers must be >= 0");
  const FactorLevels levels =
      levels_path.empty() ? FactorLevels{} : load_levels(levels_path);
  const auto design = full_factorial(levels);
  const auto records = run_sweep(design, reps, seed, workers);

  std::ostringstream csv;
  write_records_csv(csv, records);
  write_file(out_path, csv.str());
  return 0;
}

int cmd_analyze(const std::string& in_path, const std::string& stats_path,
                const std::string& importance_path, int trees,
                std::uint64_t seed) {
  if (trees < 1) throw ConfigError("trees must be >= 1");
  auto in = open_input(in_path);
  const auto records = read_records_csv(in);
  if (records.empty()) throw ConfigError(in_path + ": no run records");

  std::vector<double> critical_asrd;
  for (const auto& rec : records)
    if (label_critical(rec.asrd)) critical_asrd.push_back(rec.asrd);

  std::optional<SummaryStats> stats;
  if (critical_asrd.empty())
    std::cerr << "warning: no critical runs in " << in_path
              << "; stats will be empty\n";
  else
    stats = describe(critical_asrd);

  std::ostringstream stats_csv;
  write_stats_csv(stats_csv, stats);
  write_file(stats_path, stats_csv.str());

  ForestConfig cfg;
  cfg.n_trees = trees;
  cfg.seed = seed;
  const auto forest = fit_forest(dataset_from_records(records), cfg);
  const auto report = gini_importances(forest);

  std::ostringstream importance_csv;
  write_importance_csv(importance_csv, report);
  write_file(importance_path, importance_csv.str());
  return 0;
}

int cmd_report(const std::string& in_path, const std::string& out_path) {
  auto in = open_input(in_path);
  const auto rows = read_importance_csv(in);
  write_file(out_path, bar_chart_svg(rows, "Gini importance"));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decentralized drone-swarm recharge coordination simulator"};
  app.require_subcommand(1);

  std::string config_path, out_path, trace_path, levels_path, in_path;
  std::string stats_path, importance_path;
  std::uint64_t seed = 1;
  int reps = 10, workers = 0, trees = 200;

  auto* sim = app.add_subcommand("simulate", "Run one simulation");
  sim->add_option("--config", config_path, "key=value run configuration")
      ->required();
  sim->add_option("--seed", seed, "run seed (default 1)");
  sim->add_option("--out", out_path, "result CSV path")->required();
  sim->add_option("--trace", trace_path, "optional per-tick trace CSV path");

  auto* sweep = app.add_subcommand("sweep", "Run the full factorial sweep");
  sweep->add_option("--levels", levels_path,
                    "levels file (name=low,high); defaults otherwise");
  sweep->add_option("--reps", reps, "repetitions per design point (default 10)");
  sweep->add_option("--seed", seed, "base seed (default 1)");
  sweep->add_option("--out", out_path, "results CSV path")->required();
  sweep->add_option("--workers", workers,
                    "worker threads; 0 = hardware concurrency");

  auto* analyze = app.add_subcommand("analyze", "Summarize a sweep CSV");
  analyze->add_option("--in", in_path, "sweep results CSV")->required();
  analyze->add_option("--stats", stats_path, "output stats CSV")->required();
  analyze->add_option("--importance", importance_path, "output importance CSV")
      ->required();
  analyze->add_option("--trees", trees, "forest size (default 200)");
  analyze->add_option("--seed", seed, "forest seed (default 1)");

  auto* report = app.add_subcommand("report", "Render an importance bar chart");
  report->add_option("--in", in_path, "importance CSV")->required();
  report->add_option("--out", out_path, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sim->parsed())
      return cmd_simulate(config_path, seed, out_path, trace_path);
    if (sweep->parsed())
      return cmd_sweep(levels_path, reps, seed, out_path, workers);
    if (analyze->parsed())
      return cmd_analyze(in_path, stats_path, importance_path, trees, seed);
    if (report->parsed()) return cmd_report(in_path, out_path);
  } catch (const swarmsim::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const swarmsim::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
