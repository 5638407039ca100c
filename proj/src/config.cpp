#include "plasmodium/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>

#include "plasmodium/errors.hpp"

namespace plasmodium {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n";
  const auto b = s.find_first_not_of(kSpace);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(kSpace);
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, const char* want) {
  throw ConfigError(std::string(key) + ": expected " + want + ", got '" + std::string(value) +
                    "'");
}

template <typename T>
T parse_number(std::string_view key, std::string_view value, const char* want) {
  const auto text = trim(value);
  T out{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last || text.empty()) bad_value(key, value, want);
  return out;
}

}  // namespace

std::vector<Setting> parse_settings(std::istream& in) {
  std::vector<Setting> out;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    out.push_back({std::string(key), std::string(trim(line.substr(eq + 1))), line_no});
  }
  if (in.bad()) throw IoError("failed reading config");
  return out;
}

std::vector<Setting> parse_settings_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  return parse_settings(in);
}

Setting parse_override(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos)
    throw ConfigError("override '" + std::string(text) + "' is not key=value");
  const auto key = trim(text.substr(0, eq));
  if (key.empty()) throw ConfigError("override '" + std::string(text) + "' has an empty key");
  return {std::string(key), std::string(trim(text.substr(eq + 1))), 0};
}

std::int64_t parse_int(std::string_view key, std::string_view value) {
  return parse_number<std::int64_t>(key, value, "an integer");
}

std::uint64_t parse_uint(std::string_view key, std::string_view value) {
  if (!trim(value).empty() && trim(value).front() == '-') bad_value(key, value, "an unsigned integer");
  return parse_number<std::uint64_t>(key, value, "an unsigned integer");
}

double parse_real(std::string_view key, std::string_view value) {
  return parse_number<double>(key, value, "a number");
}

std::vector<std::int64_t> parse_int_list(std::string_view key, std::string_view value) {
  std::vector<std::int64_t> out;
  std::string_view rest = trim(value);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    out.push_back(parse_int(key, rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (trim(rest).empty()) bad_value(key, value, "a comma separated integer list");
  }
  return out;
}

std::string format_real(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

}  // namespace plasmodium
