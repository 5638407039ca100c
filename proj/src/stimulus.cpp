#include "plasmodium/stimulus.hpp"

#include <cmath>
#include <string>

#include "plasmodium/agents.hpp"
#include "plasmodium/errors.hpp"

namespace plasmodium {

StimulusEvent StimulusEvent::uniform(CellMask region, std::int64_t start, std::int64_t end,
                                     double magnitude) {
  StimulusEvent e;
  e.kind = StimulusKind::kUniformAttractant;
  e.region = std::move(region);
  e.start_step = start;
  e.end_step = end;
  e.magnitude = magnitude;
  return e;
}

StimulusEvent StimulusEvent::from_image(StimulusImage image, std::int64_t start,
                                        std::int64_t end) {
  StimulusEvent e;
  e.kind = StimulusKind::kImageAttractant;
  e.image = std::move(image);
  e.start_step = start;
  e.end_step = end;
  return e;
}

StimulusEvent StimulusEvent::adverse(CellMask region, std::int64_t start, std::int64_t end) {
  StimulusEvent e;
  e.kind = StimulusKind::kAdverse;
  e.region = std::move(region);
  e.start_step = start;
  e.end_step = end;
  return e;
}

void StimulusSchedule::validate(const GridDims& dims) const {
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& e = events[i];
    const std::string tag = "stimulus event " + std::to_string(i);
    if (e.start_step > e.end_step) throw ConfigError(tag + ": start_step > end_step");
    if (e.dims() != dims) throw ConfigError(tag + ": dimensions do not match the lattice");
    if (e.kind == StimulusKind::kUniformAttractant && !(e.magnitude >= 0.0))
      throw ConfigError(tag + ": magnitude must be >= 0");
  }
}

double project(const StimulusSchedule& schedule, std::int64_t step, ChemoField& field) {
  double added = 0.0;
  for (const auto& e : schedule.events) {
    if (e.dims() != field.dims())
      throw ConfigError("stimulus dimensions do not match the lattice");
    if (!e.active(step)) continue;
    switch (e.kind) {
      case StimulusKind::kUniformAttractant:
        for (std::size_t i = 0; i < field.size(); ++i) {
          if (e.region[i] != 0) {
            field[i] += e.magnitude;
            added += e.magnitude;
          }
        }
        break;
      case StimulusKind::kImageAttractant:
        for (std::size_t i = 0; i < field.size(); ++i) {
          const double v = e.image[i] * kImageBrightnessScale;
          field[i] += v;
          added += v;
        }
        break;
      case StimulusKind::kAdverse:
        break;
    }
  }
  return added;
}

void fill_attenuation_map(const StimulusSchedule& schedule, std::int64_t step,
                          MultiplierMap& out) {
  out.fill(1.0);
  for (const auto& e : schedule.events) {
    if (e.kind != StimulusKind::kAdverse || !e.active(step)) continue;
    if (e.dims() != out.dims()) throw ConfigError("adverse region does not match the lattice");
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (e.region[i] != 0) out[i] = kAdverseAttenuation;
    }
  }
}

MultiplierMap sensitivity_map(const StimulusSchedule& schedule, std::int64_t step,
                              const GridDims& dims) {
  MultiplierMap m(dims, 1.0);
  fill_attenuation_map(schedule, step, m);
  return m;
}

MultiplierMap deposition_map(const StimulusSchedule& schedule, std::int64_t step,
                             const GridDims& dims) {
  return sensitivity_map(schedule, step, dims);
}

CellMask column_band_mask(const GridDims& dims, int begin, int end, int row_begin,
                          int row_end) {
  if (row_end < 0) row_end = dims.height;
  if (begin < 0 || end > dims.width || begin > end || row_begin < 0 ||
      row_end > dims.height || row_begin > row_end) {
    throw ConfigError("band mask outside the lattice");
  }
  CellMask m(dims, 0);
  for (int y = row_begin; y < row_end; ++y)
    for (int x = begin; x < end; ++x) m.at(x, y) = 1;
  return m;
}

namespace {

void check_brightness(int v, const char* name) {
  if (v < 0 || v > 255) throw ConfigError(std::string(name) + " must be in [0, 255]");
}

}  // namespace

std::vector<ColumnRange> chevreul_bars(const GridDims& dims, const ChevreulParams& params) {
  if (params.n_bars < 2) throw ConfigError("chevreul.n_bars must be >= 2");
  if (params.border_width < 0) throw ConfigError("chevreul.border_width must be >= 0");
  const int interior = dims.width - 2 * params.border_width;
  if (interior < params.n_bars)
    throw ConfigError("image too narrow for chevreul borders and bars");
  const int bar_width = interior / params.n_bars;
  std::vector<ColumnRange> bars;
  bars.reserve(static_cast<std::size_t>(params.n_bars));
  for (int k = 0; k < params.n_bars; ++k) {
    const int begin = params.border_width + k * bar_width;
    const int end = k + 1 == params.n_bars ? dims.width - params.border_width : begin + bar_width;
    bars.push_back({begin, end});
  }
  return bars;
}

int chevreul_bar_brightness(const ChevreulParams& params, int bar) {
  const double step =
      static_cast<double>(params.max_brightness - params.min_brightness) / (params.n_bars - 1);
  return static_cast<int>(std::lround(params.min_brightness + bar * step));
}

StimulusImage build_chevreul(const GridDims& dims, const ChevreulParams& params) {
  if (dims.width <= 0 || dims.height <= 0) throw ConfigError("image dimensions must be positive");
  check_brightness(params.min_brightness, "chevreul.min_brightness");
  check_brightness(params.max_brightness, "chevreul.max_brightness");
  const auto bars = chevreul_bars(dims, params);
  StimulusImage img(dims, 0);
  for (int k = 0; k < static_cast<int>(bars.size()); ++k) {
    const auto value = static_cast<std::uint8_t>(chevreul_bar_brightness(params, k));
    for (int y = 0; y < dims.height; ++y)
      for (int x = bars[k].begin; x < bars[k].end; ++x) img.at(x, y) = value;
  }
  return img;
}

std::pair<ColumnRange, ColumnRange> sbc_bands(const GridDims& dims, const SbcParams& params) {
  const int half = dims.width / 2;
  if (params.band_width <= 0) throw ConfigError("sbc.band_width must be > 0");
  if (params.band_width > half) throw ConfigError("sbc band is wider than half the image");
  const int offset = (half - params.band_width) / 2;
  return {{offset, offset + params.band_width},
          {half + offset, half + offset + params.band_width}};
}

StimulusImage build_sbc(const GridDims& dims, const SbcParams& params) {
  if (dims.width < 2 || dims.height <= 0) throw ConfigError("image dimensions too small");
  check_brightness(params.left_brightness, "sbc.left_brightness");
  check_brightness(params.right_brightness, "sbc.right_brightness");
  check_brightness(params.band_brightness, "sbc.band_brightness");
  if (params.left_brightness == params.right_brightness)
    throw ConfigError("sbc left and right brightness must differ");
  const auto [left_band, right_band] = sbc_bands(dims, params);
  const int half = dims.width / 2;
  StimulusImage img(dims, 0);
  for (int y = 0; y < dims.height; ++y) {
    for (int x = 0; x < dims.width; ++x) {
      int v = x < half ? params.left_brightness : params.right_brightness;
      if ((x >= left_band.begin && x < left_band.end) ||
          (x >= right_band.begin && x < right_band.end)) {
        v = params.band_brightness;
      }
      img.at(x, y) = static_cast<std::uint8_t>(v);
    }
  }
  return img;
}

}  // namespace plasmodium
