#pragma once

#include <string>
#include <string_view>

namespace swarmsim {

/// "10" for integral values, shortest decimal otherwise ("0.1").
std::string format_number(double v);

/// Fixed-point with exactly `decimals` digits, e.g. format_fixed(0.5, 6)
/// == "0.500000".
std::string format_fixed(double v, int decimals);

/// Strict full-string parses; return false on any trailing garbage.
bool parse_double(std::string_view text, double& out);
bool parse_int(std::string_view text, int& out);
bool parse_u64(std::string_view text, std::uint64_t& out);

std::string_view trim(std::string_view text);

}  // namespace swarmsim
