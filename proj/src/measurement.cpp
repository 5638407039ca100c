#include "plasmodium/measurement.hpp"

#include <algorithm>
#include <string>

#include "plasmodium/errors.hpp"

namespace plasmodium {

DensityProfile column_density(const SimState& state) {
  DensityProfile p{state.step_count,
                   std::vector<int>(static_cast<std::size_t>(state.field.width()), 0)};
  for (const Particle& particle : state.particles) {
    ++p.counts[static_cast<std::size_t>(cell_of(particle.position).col)];
  }
  return p;
}

int density_range(const DensityProfile& profile) {
  if (profile.counts.empty()) return 0;
  const auto [lo, hi] = std::minmax_element(profile.counts.begin(), profile.counts.end());
  return *hi - *lo;
}

int density_range(const DensityProfile& profile, std::span<const int> columns) {
  if (columns.empty()) throw ConfigError("density_range: empty column subset");
  const auto width = static_cast<int>(profile.counts.size());
  int lo = 0;
  int hi = 0;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const int x = columns[i];
    if (x < 0 || x >= width) throw ConfigError("density_range: column out of range");
    const int v = profile.counts[static_cast<std::size_t>(x)];
    if (i == 0 || v < lo) lo = v;
    if (i == 0 || v > hi) hi = v;
  }
  return hi - lo;
}

RegionStat region_mean(const SimState& state, const CellMask& region) {
  if (region.dims() != state.occupancy.dims())
    throw ConfigError("region_mean: region does not match the lattice");
  std::size_t cells = 0;
  std::size_t occupied = 0;
  const auto& sites = state.occupancy.sites();
  for (std::size_t i = 0; i < region.size(); ++i) {
    if (region[i] == 0) continue;
    ++cells;
    if (sites[i] != OccupancyGrid::kEmptySite) ++occupied;
  }
  if (cells == 0) throw ConfigError("region_mean: empty region");
  return {static_cast<double>(occupied) / static_cast<double>(cells), state.step_count};
}

void DensityRecord::append(DensityProfile p) {
  const std::int64_t expected =
      profiles_.empty() ? p.step : profiles_.back().step + interval_;
  if (!profiles_.empty() && p.step != expected) {
    throw InvariantViolation("density record expected step " + std::to_string(expected) +
                             ", got " + std::to_string(p.step));
  }
  profiles_.push_back(std::move(p));
}

CountMatrix spacetime_matrix(const DensityRecord& record) {
  if (record.empty()) throw ConfigError("spacetime_matrix: empty record");
  const auto width = static_cast<int>(record.at(0).counts.size());
  CountMatrix m(GridDims{width, static_cast<int>(record.size())});
  for (int row = 0; row < m.height(); ++row) {
    const auto& counts = record.at(static_cast<std::size_t>(row)).counts;
    std::copy(counts.begin(), counts.end(),
              m.cells().begin() + static_cast<std::ptrdiff_t>(m.dims().index(0, row)));
  }
  return m;
}

Grid<std::uint8_t> normalize_to_grey(const CountMatrix& matrix) {
  Grid<std::uint8_t> out(matrix.dims(), 0);
  if (matrix.size() == 0) return out;
  const auto [lo_it, hi_it] = std::minmax_element(matrix.cells().begin(), matrix.cells().end());
  const int lo = *lo_it;
  const int hi = *hi_it;
  if (hi == lo) return out;
  const auto span = static_cast<std::int64_t>(hi) - lo;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    // Integer rounding keeps the export byte-identical across platforms.
    const std::int64_t num = (static_cast<std::int64_t>(matrix[i]) - lo) * 255;
    out[i] = static_cast<std::uint8_t>((2 * num + span) / (2 * span));
  }
  return out;
}

std::vector<ContrastPoint> contrast_series(const DensityRecord& record) {
  std::vector<ContrastPoint> series;
  series.reserve(record.size());
  for (const auto& p : record.profiles()) series.push_back({p.step, density_range(p)});
  return series;
}

double mean_count(const DensityProfile& profile, ColumnRange range) {
  if (range.size() <= 0 || range.begin < 0 ||
      range.end > static_cast<int>(profile.counts.size())) {
    throw ConfigError("mean_count: bad column range");
  }
  double total = 0.0;
  for (int x = range.begin; x < range.end; ++x) total += profile.counts[static_cast<std::size_t>(x)];
  return total / range.size();
}

BarEdges bar_edges(const DensityProfile& profile, ColumnRange bar) {
  const int quarter = std::max(1, bar.size() / 4);
  return {mean_count(profile, {bar.begin, bar.begin + quarter}),
          mean_count(profile, {bar.end - quarter, bar.end})};
}

Grid<std::uint8_t> occupancy_image(const SimState& state) {
  Grid<std::uint8_t> img(state.occupancy.dims(), 0);
  const auto& sites = state.occupancy.sites();
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (sites[i] != OccupancyGrid::kEmptySite) img[i] = 255;
  }
  return img;
}

}  // namespace plasmodium
