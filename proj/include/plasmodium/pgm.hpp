#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "plasmodium/grid.hpp"

namespace plasmodium {

using GreyImage = Grid<std::uint8_t>;

/// P5 is binary, P2 is ASCII. Both are written with maxval 255.
enum class PgmFormat { kBinary, kAscii };

void write_pgm(std::ostream& out, const GreyImage& image, PgmFormat format = PgmFormat::kBinary);
void write_pgm(const std::filesystem::path& path, const GreyImage& image,
               PgmFormat format = PgmFormat::kBinary);

/// Reads P5 or P2 with maxval 255; `#` comments in the header are skipped.
/// Throws ConfigError on malformed content, IoError when the file cannot be read.
[[nodiscard]] GreyImage read_pgm(std::istream& in);
[[nodiscard]] GreyImage read_pgm(const std::filesystem::path& path);

}  // namespace plasmodium
