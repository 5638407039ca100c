#include "plasmodium/pgm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "plasmodium/errors.hpp"

namespace plasmodium {

void write_pgm(std::ostream& out, const GreyImage& image, PgmFormat format) {
  const bool binary = format == PgmFormat::kBinary;
  out << (binary ? "P5" : "P2") << '\n'
      << image.width() << ' ' << image.height() << '\n'
      << 255 << '\n';
  if (binary) {
    const auto px = image.cells();
    out.write(reinterpret_cast<const char*>(px.data()), static_cast<std::streamsize>(px.size()));
  } else {
    for (int y = 0; y < image.height(); ++y) {
      for (int x = 0; x < image.width(); ++x) {
        if (x > 0) out << ' ';
        out << static_cast<int>(image.at(x, y));
      }
      out << '\n';
    }
  }
  if (!out) throw IoError("failed writing PGM data");
}

void write_pgm(const std::filesystem::path& path, const GreyImage& image, PgmFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_pgm(out, image, format);
}

namespace {

// Skips whitespace and comment lines between header tokens.
void skip_separators(std::istream& in) {
  for (;;) {
    const int c = in.peek();
    if (c == '#') {
      std::string ignored;
      std::getline(in, ignored);
    } else if (c != EOF && std::isspace(c)) {
      in.get();
    } else {
      return;
    }
  }
}

int read_header_int(std::istream& in, const char* what) {
  skip_separators(in);
  int v = -1;
  if (!(in >> v) || v < 0) throw ConfigError(std::string("PGM: bad ") + what);
  return v;
}

}  // namespace

GreyImage read_pgm(std::istream& in) {
  char magic[2] = {};
  if (!in.read(magic, 2) || magic[0] != 'P' || (magic[1] != '5' && magic[1] != '2'))
    throw ConfigError("PGM: expected P5 or P2 magic");
  const bool binary = magic[1] == '5';
  const int width = read_header_int(in, "width");
  const int height = read_header_int(in, "height");
  const int maxval = read_header_int(in, "maxval");
  if (width == 0 || height == 0) throw ConfigError("PGM: empty image");
  if (maxval != 255) throw ConfigError("PGM: only maxval 255 is supported");

  GreyImage image(GridDims{width, height});
  if (binary) {
    // Exactly one whitespace byte separates the header from the raster.
    if (!std::isspace(in.get())) throw ConfigError("PGM: malformed header");
    auto px = image.cells();
    if (!in.read(reinterpret_cast<char*>(px.data()), static_cast<std::streamsize>(px.size())))
      throw ConfigError("PGM: truncated raster");
  } else {
    for (auto& px : image.cells()) {
      int v = -1;
      if (!(in >> v) || v < 0 || v > 255) throw ConfigError("PGM: bad ASCII sample");
      px = static_cast<std::uint8_t>(v);
    }
  }
  return image;
}

GreyImage read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_pgm(in);
}

}  // namespace plasmodium
