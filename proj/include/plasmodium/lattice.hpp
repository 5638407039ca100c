#pragma once

#include <cstdint>
#include <vector>

#include "plasmodium/grid.hpp"

namespace plasmodium {

/// Continuous lattice position in pixels. x grows rightward, y downward.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Integer lattice site.
struct Cell {
  int col = 0;
  int row = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Chemoattractant concentration per cell. Never negative.
using ChemoField = Grid<double>;

/// 1 where particles may live, 0 for walls.
using HabitabilityMask = Grid<std::uint8_t>;

/// Per-cell multiplier applied to sensing or deposition (1.0 or 0.2).
using MultiplierMap = Grid<double>;

/// Each site holds at most one particle id, or kEmptySite.
class OccupancyGrid {
 public:
  static constexpr std::int32_t kEmptySite = -1;

  OccupancyGrid() = default;
  explicit OccupancyGrid(GridDims dims) : sites_(dims, kEmptySite) {}

  [[nodiscard]] const GridDims& dims() const noexcept { return sites_.dims(); }
  [[nodiscard]] std::int32_t at(Cell c) const noexcept { return sites_.at(c.col, c.row); }
  [[nodiscard]] bool empty_at(Cell c) const noexcept { return at(c) == kEmptySite; }

  void place(Cell c, std::int32_t id) noexcept { sites_.at(c.col, c.row) = id; }
  void clear(Cell c) noexcept { sites_.at(c.col, c.row) = kEmptySite; }
  void move(Cell from, Cell to) noexcept {
    const std::int32_t id = at(from);
    clear(from);
    place(to, id);
  }

  [[nodiscard]] const Grid<std::int32_t>& sites() const noexcept { return sites_; }

  friend bool operator==(const OccupancyGrid&, const OccupancyGrid&) = default;

 private:
  Grid<std::int32_t> sites_;
};

inline constexpr int kKernelSize = 5;
inline constexpr double kDampingFactor = 0.95;

/// Periodic reduction of an integer coordinate into [0, extent).
[[nodiscard]] int wrap(int coord, int extent) noexcept;

/// Periodic reduction of a continuous coordinate into [0, extent).
[[nodiscard]] double wrap(double coord, double extent) noexcept;

[[nodiscard]] Vec2 wrap(Vec2 position, const GridDims& dims) noexcept;

/// Cell containing an already-wrapped position (floor of each coordinate).
[[nodiscard]] Cell cell_of(Vec2 position) noexcept;

/// Concentration at the cell under `position` after wrapping; walls read 0.
[[nodiscard]] double sample_field(const ChemoField& field, const HabitabilityMask& mask,
                                  Vec2 position) noexcept;

/// Reusable buffer for diffuse_and_damp_into.
struct DiffusionScratch {
  std::vector<double> row_sums;
  std::vector<double> padded_row;
};

/**
 * One diffusion pass: every habitable cell becomes 0.95 x the mean of the
 * 5x5 periodic neighbourhood of `input`. Walls count as 0 in the mean and
 * are 0 in the output. Reads only `input`; `output` is fully overwritten.
 *
 * Summation order is fixed (five-wide row sums, then five of those down the
 * column, left to right and top to bottom) so results are reproducible.
 */
void diffuse_and_damp_into(const ChemoField& input, const HabitabilityMask& mask,
                           ChemoField& output, DiffusionScratch& scratch);

[[nodiscard]] ChemoField diffuse_and_damp(const ChemoField& input,
                                          const HabitabilityMask& mask);

[[nodiscard]] double field_mass(const ChemoField& field) noexcept;

}  // namespace plasmodium
