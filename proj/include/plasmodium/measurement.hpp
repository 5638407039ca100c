#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "plasmodium/grid.hpp"
#include "plasmodium/simulation.hpp"
#include "plasmodium/stimulus.hpp"

namespace plasmodium {

/// Particles per lattice column at one step.
struct DensityProfile {
  std::int64_t step = 0;
  std::vector<int> counts;
  friend bool operator==(const DensityProfile&, const DensityProfile&) = default;
};

[[nodiscard]] DensityProfile column_density(const SimState& state);

/// max - min of the counts, over all columns.
[[nodiscard]] int density_range(const DensityProfile& profile);

/// max - min over the given columns. Throws ConfigError if `columns` is empty
/// or holds an out-of-range index.
[[nodiscard]] int density_range(const DensityProfile& profile, std::span<const int> columns);

struct RegionStat {
  double mean_density = 0.0;
  std::int64_t step = 0;
};

/// Fraction of the region's cells holding a particle. Throws ConfigError on
/// an empty region or mismatched dimensions.
[[nodiscard]] RegionStat region_mean(const SimState& state, const CellMask& region);

/// Profiles sampled every `sample_interval` steps.
class DensityRecord {
 public:
  explicit DensityRecord(std::int64_t sample_interval = 10) : interval_(sample_interval) {}

  /// Throws InvariantViolation unless `p.step` is the next sample step.
  void append(DensityProfile p);

  [[nodiscard]] std::int64_t sample_interval() const noexcept { return interval_; }
  [[nodiscard]] const std::vector<DensityProfile>& profiles() const noexcept { return profiles_; }
  [[nodiscard]] std::size_t size() const noexcept { return profiles_.size(); }
  [[nodiscard]] bool empty() const noexcept { return profiles_.empty(); }
  [[nodiscard]] const DensityProfile& at(std::size_t sample) const { return profiles_.at(sample); }

 private:
  std::int64_t interval_;
  std::vector<DensityProfile> profiles_;
};

class DensityRecorder final : public Recorder {
 public:
  explicit DensityRecorder(std::int64_t sample_interval) : record_(sample_interval) {}
  void observe(const SimState& state) override { record_.append(column_density(state)); }
  [[nodiscard]] const DensityRecord& record() const noexcept { return record_; }

 private:
  DensityRecord record_;
};

/// Rows are samples in time order, columns are lattice columns.
using CountMatrix = Grid<int>;

[[nodiscard]] CountMatrix spacetime_matrix(const DensityRecord& record);

/// Linear rescale of the matrix so its minimum maps to 0 and maximum to 255.
/// A constant matrix maps to all zeros.
[[nodiscard]] Grid<std::uint8_t> normalize_to_grey(const CountMatrix& matrix);

struct ContrastPoint {
  std::int64_t step = 0;
  int range = 0;
  friend bool operator==(const ContrastPoint&, const ContrastPoint&) = default;
};

[[nodiscard]] std::vector<ContrastPoint> contrast_series(const DensityRecord& record);

/// Mean column count over [range.begin, range.end).
[[nodiscard]] double mean_count(const DensityProfile& profile, ColumnRange range);

/// Left- and right-quarter mean counts of one bar.
struct BarEdges {
  double left_quarter = 0.0;
  double right_quarter = 0.0;
};

/// Quarter width is max(1, bar width / 4).
[[nodiscard]] BarEdges bar_edges(const DensityProfile& profile, ColumnRange bar);

/// Occupancy snapshot: 255 where a particle sits, 0 elsewhere.
[[nodiscard]] Grid<std::uint8_t> occupancy_image(const SimState& state);

}  // namespace plasmodium
