#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plasmodium {

/// One `key = value` line, in file order.
struct Setting {
  std::string key;
  std::string value;
  int line = 0;
  friend bool operator==(const Setting&, const Setting&) = default;
};

/**
 * Parses flat `key = value` text. `#` starts a comment that runs to the end
 * of the line; blank lines are skipped; keys and values are trimmed.
 * Throws ConfigError naming the line for anything else.
 */
[[nodiscard]] std::vector<Setting> parse_settings(std::istream& in);
[[nodiscard]] std::vector<Setting> parse_settings_file(const std::filesystem::path& path);

/// Parses a single `key=value` command-line override.
[[nodiscard]] Setting parse_override(std::string_view text);

[[nodiscard]] std::int64_t parse_int(std::string_view key, std::string_view value);
[[nodiscard]] std::uint64_t parse_uint(std::string_view key, std::string_view value);
[[nodiscard]] double parse_real(std::string_view key, std::string_view value);

/// Comma separated integers; an empty value is an empty list.
[[nodiscard]] std::vector<std::int64_t> parse_int_list(std::string_view key,
                                                       std::string_view value);

/// Shortest text that parses back to exactly `value`.
[[nodiscard]] std::string format_real(double value);

}  // namespace plasmodium
