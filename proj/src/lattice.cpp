#include "plasmodium/lattice.hpp"

#include <cmath>
#include <string>

#include "plasmodium/errors.hpp"

namespace plasmodium {

void validate_lattice_dims(const GridDims& dims) {
  if (dims.width < kMinLatticeExtent || dims.height < kMinLatticeExtent) {
    throw ConfigError("lattice must be at least " + std::to_string(kMinLatticeExtent) +
                      "x" + std::to_string(kMinLatticeExtent) + ", got " +
                      std::to_string(dims.width) + "x" + std::to_string(dims.height));
  }
}

int wrap(int coord, int extent) noexcept {
  int r = coord % extent;
  return r < 0 ? r + extent : r;
}

double wrap(double coord, double extent) noexcept {
  // Sensor offsets and steps are small relative to the lattice, so the
  // single-shift paths cover almost every call.
  if (coord >= 0.0 && coord < extent) return coord;
  double r = coord < 0.0 && coord >= -extent ? coord + extent
             : coord >= extent && coord < 2.0 * extent ? coord - extent
                                                        : std::fmod(coord, extent);
  if (r < 0.0) r += extent;
  // -tiny + extent can round up to extent itself.
  if (r >= extent) r = 0.0;
  return r;
}

Vec2 wrap(Vec2 position, const GridDims& dims) noexcept {
  return {wrap(position.x, static_cast<double>(dims.width)),
          wrap(position.y, static_cast<double>(dims.height))};
}

Cell cell_of(Vec2 position) noexcept {
  // Truncation equals floor for the non-negative, wrapped positions this is
  // defined on.
  return {static_cast<int>(position.x), static_cast<int>(position.y)};
}

double sample_field(const ChemoField& field, const HabitabilityMask& mask,
                    Vec2 position) noexcept {
  const Cell c = cell_of(wrap(position, field.dims()));
  if (mask.at(c.col, c.row) == 0) return 0.0;
  return field.at(c.col, c.row);
}

void diffuse_and_damp_into(const ChemoField& input, const HabitabilityMask& mask,
                           ChemoField& output, DiffusionScratch& scratch) {
  const GridDims dims = input.dims();
  const int w = dims.width;
  const int h = dims.height;
  constexpr int kRadius = kKernelSize / 2;
  constexpr double kCells = kKernelSize * kKernelSize;
  if (mask.dims() != dims) throw ConfigError("diffusion: field and mask dimensions differ");

  if (output.dims() != dims) output = ChemoField(dims);
  auto& rows = scratch.row_sums;
  rows.assign(dims.cell_count(), 0.0);

  // Each row is copied with a periodic halo so the window sums need no wrapping.
  std::vector<double>& padded = scratch.padded_row;
  padded.assign(static_cast<std::size_t>(w + 2 * kRadius), 0.0);
  for (int y = 0; y < h; ++y) {
    const std::size_t base = dims.index(0, y);
    for (int x = -kRadius; x < w + kRadius; ++x) {
      const std::size_t i = base + static_cast<std::size_t>(wrap(x, w));
      padded[static_cast<std::size_t>(x + kRadius)] = mask[i] != 0 ? input[i] : 0.0;
    }
    for (int x = 0; x < w; ++x) {
      const double* win = padded.data() + x;
      double s = 0.0;
      for (int k = 0; k < kKernelSize; ++k) s += win[k];
      rows[base + static_cast<std::size_t>(x)] = s;
    }
  }

  for (int y = 0; y < h; ++y) {
    std::size_t src[kKernelSize];
    for (int dy = -kRadius; dy <= kRadius; ++dy) {
      src[dy + kRadius] = dims.index(0, wrap(y + dy, h));
    }
    const std::size_t dst = dims.index(0, y);
    for (int x = 0; x < w; ++x) {
      const auto xi = static_cast<std::size_t>(x);
      if (mask[dst + xi] == 0) {
        output[dst + xi] = 0.0;
        continue;
      }
      double s = 0.0;
      for (std::size_t k = 0; k < kKernelSize; ++k) s += rows[src[k] + xi];
      output[dst + xi] = (s / kCells) * kDampingFactor;
    }
  }
}

ChemoField diffuse_and_damp(const ChemoField& input, const HabitabilityMask& mask) {
  ChemoField out(input.dims());
  DiffusionScratch scratch;
  diffuse_and_damp_into(input, mask, out, scratch);
  return out;
}

double field_mass(const ChemoField& field) noexcept {
  double total = 0.0;
  for (double v : field.cells()) total += v;
  return total;
}

}  // namespace plasmodium
