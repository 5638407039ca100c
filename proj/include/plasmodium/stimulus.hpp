#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "plasmodium/grid.hpp"
#include "plasmodium/lattice.hpp"

namespace plasmodium {

/// Greyscale image, brightness 0..255 per pixel.
using StimulusImage = Grid<std::uint8_t>;

/// 1 for cells covered by a stimulus region.
using CellMask = Grid<std::uint8_t>;

inline constexpr double kUniformAttractantPerStep = 1.275;
inline constexpr double kImageBrightnessScale = 0.01;

enum class StimulusKind { kUniformAttractant, kImageAttractant, kAdverse };

/// A stimulus active for steps in [start_step, end_step).
struct StimulusEvent {
  StimulusKind kind = StimulusKind::kUniformAttractant;
  CellMask region;      // uniform and adverse kinds
  StimulusImage image;  // image kind
  std::int64_t start_step = 0;
  std::int64_t end_step = 0;
  double magnitude = kUniformAttractantPerStep;

  static StimulusEvent uniform(CellMask region, std::int64_t start, std::int64_t end,
                               double magnitude = kUniformAttractantPerStep);
  static StimulusEvent from_image(StimulusImage image, std::int64_t start, std::int64_t end);
  static StimulusEvent adverse(CellMask region, std::int64_t start, std::int64_t end);

  [[nodiscard]] bool active(std::int64_t step) const noexcept {
    return start_step <= step && step < end_step;
  }
  [[nodiscard]] const GridDims& dims() const noexcept {
    return kind == StimulusKind::kImageAttractant ? image.dims() : region.dims();
  }
};

/// Events are applied in list order.
struct StimulusSchedule {
  std::vector<StimulusEvent> events;

  /// Throws ConfigError if an event is malformed or does not match `dims`.
  void validate(const GridDims& dims) const;
};

/// Adds every active attractant event into `field`. Returns the total added.
/// Throws ConfigError on a dimension mismatch.
double project(const StimulusSchedule& schedule, std::int64_t step, ChemoField& field);

/// 0.2 on cells under any active adverse event, 1.0 elsewhere.
[[nodiscard]] MultiplierMap sensitivity_map(const StimulusSchedule& schedule, std::int64_t step,
                                            const GridDims& dims);

/// Same layout as sensitivity_map; scales agent deposition.
[[nodiscard]] MultiplierMap deposition_map(const StimulusSchedule& schedule, std::int64_t step,
                                           const GridDims& dims);

/// Fills `out` with the attenuation map in place (no reallocation when dims match).
void fill_attenuation_map(const StimulusSchedule& schedule, std::int64_t step,
                          MultiplierMap& out);

/// Mask covering columns [begin, end) and rows [row_begin, row_end).
[[nodiscard]] CellMask column_band_mask(const GridDims& dims, int begin, int end,
                                        int row_begin = 0, int row_end = -1);

struct ChevreulParams {
  int n_bars = 8;
  int border_width = 50;
  int min_brightness = 25;
  int max_brightness = 200;
  friend bool operator==(const ChevreulParams&, const ChevreulParams&) = default;
};

/// Half-open column range.
struct ColumnRange {
  int begin = 0;
  int end = 0;
  [[nodiscard]] int size() const noexcept { return end - begin; }
  friend bool operator==(const ColumnRange&, const ColumnRange&) = default;
};

/// Column ranges of the bars between the borders, left to right. The rightmost bar
/// absorbs any leftover columns.
[[nodiscard]] std::vector<ColumnRange> chevreul_bars(const GridDims& dims,
                                                     const ChevreulParams& params);

[[nodiscard]] int chevreul_bar_brightness(const ChevreulParams& params, int bar);

/// Staircase of equal-width vertical bars between two dark borders.
[[nodiscard]] StimulusImage build_chevreul(const GridDims& dims, const ChevreulParams& params);

struct SbcParams {
  int left_brightness = 64;
  int right_brightness = 192;
  int band_brightness = 128;
  int band_width = 60;
  friend bool operator==(const SbcParams&, const SbcParams&) = default;
};

/// Left and right band columns, each centred in its half.
[[nodiscard]] std::pair<ColumnRange, ColumnRange> sbc_bands(const GridDims& dims,
                                                            const SbcParams& params);

/// Dark left square, light right square, identical grey band in each.
[[nodiscard]] StimulusImage build_sbc(const GridDims& dims, const SbcParams& params);

}  // namespace plasmodium
