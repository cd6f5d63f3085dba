#include "swarmsim/config_file.hpp"

#include <array>
#include <fstream>
#include <functional>
#include <istream>

#include "swarmsim/errors.hpp"
#include "swarmsim/format.hpp"

namespace swarmsim {

namespace {

[[noreturn]] void bad_line(std::size_t line_no, const std::string& what) {
  throw ConfigError("line " + std::to_string(line_no) + ": " + what);
}

// Walks key=value lines, skipping blanks and #-comments.
void for_each_kv(std::istream& in,
                 const std::function<void(std::size_t, std::string_view,
                                          std::string_view)>& visit) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string_view::npos)
      bad_line(line_no, "expected key=value");
    const std::string_view key = trim(stripped.substr(0, eq));
    const std::string_view value = trim(stripped.substr(eq + 1));
    if (key.empty()) bad_line(line_no, "empty key");
    visit(line_no, key, value);
  }
}

}  // namespace

RunConfig parse_run_config(std::istream& in) {
  RunConfig config;
  std::array<bool, kFactorCount> seen_factor{};
  bool seen_max_ticks = false;
  bool seen_motion = false;

  for_each_kv(in, [&](std::size_t line_no, std::string_view key,
                      std::string_view value) {
    if (const int f = factor_index(key); f >= 0) {
      if (seen_factor[static_cast<std::size_t>(f)])
        bad_line(line_no, "duplicate key '" + std::string(key) + "'");
      seen_factor[static_cast<std::size_t>(f)] = true;
      const bool integer_factor = f == 0 || f == 1 || f == 6;  // m, k, qty
      if (integer_factor) {
        int v = 0;
        if (!parse_int(value, v))
          bad_line(line_no, std::string(key) + " must be an integer");
        set_factor(config.params, f, v);
      } else {
        double v = 0.0;
        if (!parse_double(value, v))
          bad_line(line_no, std::string(key) + " must be a number");
        set_factor(config.params, f, v);
      }
      return;
    }
    if (key == "max_ticks") {
      if (seen_max_ticks) bad_line(line_no, "duplicate key 'max_ticks'");
      seen_max_ticks = true;
      if (!parse_int(value, config.params.max_ticks))
        bad_line(line_no, "max_ticks must be an integer");
      return;
    }
    if (key == "motion") {
      if (seen_motion) bad_line(line_no, "duplicate key 'motion'");
      seen_motion = true;
      int v = 0;
      if (!parse_int(value, v) || (v != 0 && v != 1))
        bad_line(line_no, "motion must be 0 or 1");
      config.motion = v == 1;
      return;
    }
    bad_line(line_no, "unknown key '" + std::string(key) + "'");
  });

  if (auto err = validate(config.params)) throw ConfigError(*err);
  return config;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  try {
    return parse_run_config(in);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

FactorLevels parse_levels(std::istream& in) {
  FactorLevels levels;
  std::array<bool, kFactorCount> seen{};

  for_each_kv(in, [&](std::size_t line_no, std::string_view key,
                      std::string_view value) {
    const int f = factor_index(key);
    if (f < 0) bad_line(line_no, "unknown factor '" + std::string(key) + "'");
    if (seen[static_cast<std::size_t>(f)])
      bad_line(line_no, "duplicate factor '" + std::string(key) + "'");
    seen[static_cast<std::size_t>(f)] = true;

    const auto comma = value.find(',');
    if (comma == std::string_view::npos)
      bad_line(line_no, "expected low,high");
    LevelPair pair;
    if (!parse_double(value.substr(0, comma), pair.low) ||
        !parse_double(value.substr(comma + 1), pair.high))
      bad_line(line_no, "levels must be numbers");
    levels.levels[static_cast<std::size_t>(f)] = pair;
  });

  if (auto err = validate(levels)) throw ConfigError(*err);
  return levels;
}

FactorLevels load_levels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open levels file: " + path);
  try {
    return parse_levels(in);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

}  // namespace swarmsim
