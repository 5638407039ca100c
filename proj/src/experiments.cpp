#include "plasmodium/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "plasmodium/errors.hpp"
#include "plasmodium/pgm.hpp"

namespace plasmodium {

namespace {

constexpr std::pair<ExperimentKind, std::string_view> kKindNames[] = {
    {ExperimentKind::kLi, "li"},
    {ExperimentKind::kLa, "la"},
    {ExperimentKind::kChevreul, "chevreul"},
    {ExperimentKind::kSbc, "sbc"},
    {ExperimentKind::kCustom, "custom"},
};

constexpr std::pair<StimulusShape, std::string_view> kShapeNames[] = {
    {StimulusShape::kNone, "none"},       {StimulusShape::kUniform, "uniform"},
    {StimulusShape::kAdverse, "adverse"}, {StimulusShape::kChevreul, "chevreul"},
    {StimulusShape::kSbc, "sbc"},         {StimulusShape::kImage, "image"},
};

std::string_view shape_name(StimulusShape s) {
  for (const auto& [shape, name] : kShapeNames)
    if (shape == s) return name;
  return "none";
}

// A stimulus end of -1 means "until the end of the run".
constexpr std::int64_t kUntilRunEnd = -1;

int to_int(const Setting& s) {
  const auto v = parse_int(s.key, s.value);
  if (v < INT32_MIN || v > INT32_MAX) throw ConfigError(s.key + ": value out of range");
  return static_cast<int>(v);
}

}  // namespace

std::string_view to_string(ExperimentKind kind) noexcept {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "custom";
}

ExperimentKind parse_experiment_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  throw ConfigError("unknown experiment '" + std::string(name) + "'");
}

ExperimentParams default_params(ExperimentKind kind, std::uint64_t seed) {
  ExperimentParams p;
  p.kind = kind;
  p.seed = seed;
  switch (kind) {
    case ExperimentKind::kLi:
      p.total_steps = 20000;
      p.stimulus = StimulusShape::kUniform;
      p.stimulus_start = 500;
      p.stimulus_end = 4000;
      p.snapshot_steps = {500, 2000, 4000, 8000, 20000};
      break;
    case ExperimentKind::kLa:
      p.total_steps = 18000;
      p.stimulus = StimulusShape::kAdverse;
      p.stimulus_start = 500;
      p.stimulus_end = 2500;
      p.snapshot_steps = {500, 1500, 2500, 6000, 18000};
      break;
    case ExperimentKind::kChevreul:
      p.dims = {692, 288};
      p.habitability = {ArenaKind::kFull, 1};
      p.particle_count = 169402;
      p.total_steps = 4000;
      p.stimulus = StimulusShape::kChevreul;
      p.stimulus_start = 0;
      p.stimulus_end = kUntilRunEnd;
      p.snapshot_steps = {0, 400, 4000};
      p.contrast_view_end = 550;
      break;
    case ExperimentKind::kSbc:
      p.dims = {600, 300};
      p.habitability = {ArenaKind::kFull, 1};
      p.particle_count = 153000;
      p.total_steps = 800;
      p.stimulus = StimulusShape::kSbc;
      p.stimulus_start = 0;
      p.stimulus_end = kUntilRunEnd;
      p.snapshot_steps = {0, 700};
      break;
    case ExperimentKind::kCustom:
      break;
  }
  return p;
}

void apply_setting(ExperimentParams& p, const Setting& s) {
  const std::string& k = s.key;
  if (k == "seed") p.seed = parse_uint(k, s.value);
  else if (k == "dims.width") p.dims.width = to_int(s);
  else if (k == "dims.height") p.dims.height = to_int(s);
  else if (k == "habitability.kind") {
    if (s.value == "full") p.habitability.kind = ArenaKind::kFull;
    else if (s.value == "tube") p.habitability.kind = ArenaKind::kTube;
    else throw ConfigError(k + ": expected 'full' or 'tube'");
  }
  else if (k == "habitability.wall_thickness") p.habitability.wall_thickness = to_int(s);
  else if (k == "particle_count") p.particle_count = to_int(s);
  else if (k == "total_steps") p.total_steps = parse_int(k, s.value);
  else if (k == "sample_interval") p.sample_interval = parse_int(k, s.value);
  else if (k == "agent.sensor_angle") p.agent.sensor_angle = parse_real(k, s.value);
  else if (k == "agent.rotation_angle") p.agent.rotation_angle = parse_real(k, s.value);
  else if (k == "agent.sensor_offset_min") p.agent.sensor_offset_min = to_int(s);
  else if (k == "agent.sensor_offset_max") p.agent.sensor_offset_max = to_int(s);
  else if (k == "agent.step_size") p.agent.step_size = parse_real(k, s.value);
  else if (k == "agent.deposit") p.agent.deposit = parse_real(k, s.value);
  else if (k == "stimulus.kind") {
    const auto it = std::find_if(std::begin(kShapeNames), std::end(kShapeNames),
                                 [&](const auto& e) { return e.second == s.value; });
    if (it == std::end(kShapeNames)) throw ConfigError(k + ": unknown stimulus kind '" + s.value + "'");
    p.stimulus = it->first;
  }
  else if (k == "stimulus.start_step") p.stimulus_start = parse_int(k, s.value);
  else if (k == "stimulus.end_step") p.stimulus_end = parse_int(k, s.value);
  else if (k == "stimulus.magnitude") p.stimulus_magnitude = parse_real(k, s.value);
  else if (k == "stimulus.column_begin") p.stimulus_column_begin = to_int(s);
  else if (k == "stimulus.column_end") p.stimulus_column_end = to_int(s);
  else if (k == "stimulus.image_path") p.stimulus_image_path = s.value;
  else if (k == "chevreul.n_bars") p.chevreul.n_bars = to_int(s);
  else if (k == "chevreul.border_width") p.chevreul.border_width = to_int(s);
  else if (k == "chevreul.min_brightness") p.chevreul.min_brightness = to_int(s);
  else if (k == "chevreul.max_brightness") p.chevreul.max_brightness = to_int(s);
  else if (k == "sbc.left_brightness") p.sbc.left_brightness = to_int(s);
  else if (k == "sbc.right_brightness") p.sbc.right_brightness = to_int(s);
  else if (k == "sbc.band_brightness") p.sbc.band_brightness = to_int(s);
  else if (k == "sbc.band_width") p.sbc.band_width = to_int(s);
  else if (k == "snapshot_steps") p.snapshot_steps = parse_int_list(k, s.value);
  else if (k == "contrast_view_end") p.contrast_view_end = parse_int(k, s.value);
  else {
    throw ConfigError((s.line > 0 ? "line " + std::to_string(s.line) + ": " : std::string()) +
                      "unknown key '" + k + "'");
  }
}

ExperimentParams resolve_params(std::optional<ExperimentKind> fallback,
                                const std::vector<Setting>& settings) {
  std::optional<ExperimentKind> kind = fallback;
  for (const auto& s : settings)
    if (s.key == "experiment") kind = parse_experiment_kind(s.value);
  ExperimentParams p = default_params(kind.value_or(ExperimentKind::kCustom), 0);
  for (const auto& s : settings) {
    if (s.key == "experiment" || s.key.starts_with("artifact.")) continue;
    if (s.key == "rng.algorithm") {
      if (s.value != Rng::kAlgorithm)
        throw ConfigError("rng.algorithm '" + s.value + "' is not supported by this build");
      continue;
    }
    apply_setting(p, s);
  }
  return p;
}

std::vector<Setting> to_settings(const ExperimentParams& p) {
  const auto i = [](std::int64_t v) { return std::to_string(v); };
  std::string snapshots;
  for (std::size_t n = 0; n < p.snapshot_steps.size(); ++n)
    snapshots += (n ? "," : "") + std::to_string(p.snapshot_steps[n]);
  return {
      {"experiment", std::string(to_string(p.kind))},
      {"seed", std::to_string(p.seed)},
      {"dims.width", i(p.dims.width)},
      {"dims.height", i(p.dims.height)},
      {"habitability.kind", p.habitability.kind == ArenaKind::kTube ? "tube" : "full"},
      {"habitability.wall_thickness", i(p.habitability.wall_thickness)},
      {"particle_count", i(p.particle_count)},
      {"total_steps", i(p.total_steps)},
      {"sample_interval", i(p.sample_interval)},
      {"agent.sensor_angle", format_real(p.agent.sensor_angle)},
      {"agent.rotation_angle", format_real(p.agent.rotation_angle)},
      {"agent.sensor_offset_min", i(p.agent.sensor_offset_min)},
      {"agent.sensor_offset_max", i(p.agent.sensor_offset_max)},
      {"agent.step_size", format_real(p.agent.step_size)},
      {"agent.deposit", format_real(p.agent.deposit)},
      {"stimulus.kind", std::string(shape_name(p.stimulus))},
      {"stimulus.start_step", i(p.stimulus_start)},
      {"stimulus.end_step", i(p.stimulus_end)},
      {"stimulus.magnitude", format_real(p.stimulus_magnitude)},
      {"stimulus.column_begin", i(p.stimulus_column_begin)},
      {"stimulus.column_end", i(p.stimulus_column_end)},
      {"stimulus.image_path", p.stimulus_image_path},
      {"chevreul.n_bars", i(p.chevreul.n_bars)},
      {"chevreul.border_width", i(p.chevreul.border_width)},
      {"chevreul.min_brightness", i(p.chevreul.min_brightness)},
      {"chevreul.max_brightness", i(p.chevreul.max_brightness)},
      {"sbc.left_brightness", i(p.sbc.left_brightness)},
      {"sbc.right_brightness", i(p.sbc.right_brightness)},
      {"sbc.band_brightness", i(p.sbc.band_brightness)},
      {"sbc.band_width", i(p.sbc.band_width)},
      {"snapshot_steps", snapshots},
      {"contrast_view_end", i(p.contrast_view_end)},
  };
}

ExperimentSpec build_experiment(const ExperimentParams& p) {
  ExperimentSpec spec;
  spec.params = p;
  SimConfig& c = spec.config;
  c.dims = p.dims;
  c.habitability = p.habitability;
  c.particle_count = p.particle_count;
  c.agent = p.agent;
  c.seed = p.seed;
  c.total_steps = p.total_steps;
  c.sample_interval = p.sample_interval;
  validate_lattice_dims(c.dims);
  if (c.sample_interval < 1) throw ConfigError("sample_interval must be >= 1");

  const std::int64_t start = p.stimulus_start;
  const std::int64_t end = p.stimulus_end == kUntilRunEnd ? p.total_steps : p.stimulus_end;
  const HabitabilityMask habitable = make_habitability_mask(c.dims, c.habitability);
  spec.stimulus_image = StimulusImage(c.dims, 0);

  switch (p.stimulus) {
    case StimulusShape::kNone:
      break;
    case StimulusShape::kUniform:
    case StimulusShape::kAdverse: {
      CellMask band = column_band_mask(c.dims, p.stimulus_column_begin, p.stimulus_column_end);
      if (band.cells().empty() || p.stimulus_column_begin >= p.stimulus_column_end)
        throw ConfigError("stimulus column band is empty");
      spec.stimulus_columns = ColumnRange{p.stimulus_column_begin, p.stimulus_column_end};
      for (std::size_t n = 0; n < band.size(); ++n) {
        if (band[n] != 0) spec.stimulus_image[n] = 255;
      }
      if (p.stimulus == StimulusShape::kUniform) {
        // Attractant is only projected onto habitable cells.
        for (std::size_t n = 0; n < band.size(); ++n) band[n] &= habitable[n];
        c.schedule.events.push_back(
            StimulusEvent::uniform(std::move(band), start, end, p.stimulus_magnitude));
      } else {
        c.schedule.events.push_back(StimulusEvent::adverse(std::move(band), start, end));
      }
      break;
    }
    case StimulusShape::kChevreul:
      spec.stimulus_image = build_chevreul(c.dims, p.chevreul);
      spec.bars = chevreul_bars(c.dims, p.chevreul);
      c.schedule.events.push_back(StimulusEvent::from_image(spec.stimulus_image, start, end));
      break;
    case StimulusShape::kSbc: {
      spec.stimulus_image = build_sbc(c.dims, p.sbc);
      const auto [left, right] = sbc_bands(c.dims, p.sbc);
      spec.bands = {left, right};
      c.schedule.events.push_back(StimulusEvent::from_image(spec.stimulus_image, start, end));
      break;
    }
    case StimulusShape::kImage:
      if (p.stimulus_image_path.empty()) throw ConfigError("stimulus.image_path is required");
      spec.stimulus_image = read_pgm(std::filesystem::path(p.stimulus_image_path));
      if (spec.stimulus_image.dims() != c.dims)
        throw ConfigError("stimulus image dimensions do not match the lattice");
      c.schedule.events.push_back(StimulusEvent::from_image(spec.stimulus_image, start, end));
      break;
  }

  for (const auto t : p.snapshot_steps) {
    if (t < 0 || t > p.total_steps || t % p.sample_interval != 0) {
      throw ConfigError("snapshot step " + std::to_string(t) +
                        " must be a sample step within the run");
    }
  }
  if (p.contrast_view_end < 0) throw ConfigError("contrast_view_end must be >= 0");
  c.validate();
  return spec;
}

ExperimentSpec make_li_experiment(std::uint64_t seed) {
  return build_experiment(default_params(ExperimentKind::kLi, seed));
}
ExperimentSpec make_la_experiment(std::uint64_t seed) {
  return build_experiment(default_params(ExperimentKind::kLa, seed));
}
ExperimentSpec make_chevreul_experiment(std::uint64_t seed) {
  return build_experiment(default_params(ExperimentKind::kChevreul, seed));
}
ExperimentSpec make_sbc_experiment(std::uint64_t seed) {
  return build_experiment(default_params(ExperimentKind::kSbc, seed));
}

BandRegions band_regions(const ExperimentSpec& spec) {
  if (!spec.stimulus_columns) throw ConfigError("experiment has no band stimulus");
  const auto& dims = spec.config.dims;
  const HabitabilityMask habitable = make_habitability_mask(dims, spec.config.habitability);
  BandRegions r{CellMask(dims, 0), CellMask(dims, 0)};
  for (int y = 0; y < dims.height; ++y) {
    for (int x = 0; x < dims.width; ++x) {
      if (habitable.at(x, y) == 0) continue;
      const bool in = x >= spec.stimulus_columns->begin && x < spec.stimulus_columns->end;
      (in ? r.inside : r.outside).at(x, y) = 1;
    }
  }
  return r;
}

void SnapshotRecorder::observe(const SimState& state) {
  if (std::find(steps_.begin(), steps_.end(), state.step_count) == steps_.end()) return;
  snapshots_.push_back({state.step_count, occupancy_image(state), column_density(state)});
}

ExperimentResult run_experiment(const ExperimentSpec& spec, std::span<Recorder* const> extra,
                                RunOptions options) {
  DensityRecorder density(spec.config.sample_interval);
  SnapshotRecorder snapshots(spec.params.snapshot_steps);
  std::vector<Recorder*> recorders{&density, &snapshots};
  recorders.insert(recorders.end(), extra.begin(), extra.end());
  RunResult r = run(spec.config, recorders, options);
  return {density.record(), snapshots.snapshots(), std::move(r.final_state)};
}

std::uint64_t file_checksum(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return fnv1a64(buf.str());
}

namespace {

class ArtifactWriter {
 public:
  explicit ArtifactWriter(std::filesystem::path dir) : dir_(std::move(dir)) {}

  void text(const std::string& name, const std::string& content) {
    std::ofstream out(dir_ / name, std::ios::binary);
    if (!out || !out.write(content.data(), static_cast<std::streamsize>(content.size())))
      throw IoError("cannot write " + (dir_ / name).string());
    artifacts_.push_back({name, fnv1a64(content)});
  }

  void pgm(const std::string& name, const Grid<std::uint8_t>& image) {
    std::ostringstream out(std::ios::binary);
    write_pgm(out, image);
    text(name, out.str());
  }

  [[nodiscard]] std::vector<Artifact> take() { return std::move(artifacts_); }

 private:
  std::filesystem::path dir_;
  std::vector<Artifact> artifacts_;
};

std::string density_csv(const DensityRecord& record, int width) {
  std::string out = "step";
  for (int x = 0; x < width; ++x) out += ",x" + std::to_string(x);
  out += '\n';
  for (const auto& p : record.profiles()) {
    out += std::to_string(p.step);
    for (const int c : p.counts) {
      out += ',';
      out += std::to_string(c);
    }
    out += '\n';
  }
  return out;
}

std::string contrast_csv(const std::vector<ContrastPoint>& series, std::int64_t last_step) {
  std::string out = "step,range\n";
  for (const auto& pt : series) {
    if (last_step >= 0 && pt.step > last_step) break;
    out += std::to_string(pt.step) + "," + std::to_string(pt.range) + "\n";
  }
  return out;
}

std::string profile_csv(const DensityProfile& profile) {
  std::string out = "x,count\n";
  for (std::size_t x = 0; x < profile.counts.size(); ++x)
    out += std::to_string(x) + "," + std::to_string(profile.counts[x]) + "\n";
  return out;
}

}  // namespace

RunManifest write_artifacts(const ExperimentSpec& spec, const ExperimentResult& result,
                            const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

  const auto series = contrast_series(result.record);

  ArtifactWriter w(out_dir);
  w.text("density.csv", density_csv(result.record, spec.config.dims.width));
  w.text("contrast.csv", contrast_csv(series, -1));
  if (spec.params.contrast_view_end > 0)
    w.text("contrast_view.csv", contrast_csv(series, spec.params.contrast_view_end));
  w.pgm("spacetime.pgm", normalize_to_grey(spacetime_matrix(result.record)));
  w.pgm("stimulus.pgm", spec.stimulus_image);
  for (const auto& snap : result.snapshots) {
    const std::string t = std::to_string(snap.step);
    w.pgm("snapshot_t" + t + ".pgm", snap.image);
    w.text("profile_t" + t + ".csv", profile_csv(snap.profile));
  }

  RunManifest manifest{to_settings(spec.params), std::string(Rng::kAlgorithm), w.take()};
  std::ofstream out(out_dir / "manifest.txt", std::ios::binary);
  if (!out) throw IoError("cannot write " + (out_dir / "manifest.txt").string());
  write_manifest(out, manifest);
  if (!out) throw IoError("failed writing manifest");
  return manifest;
}

RunManifest execute(const ExperimentSpec& spec, const std::filesystem::path& out_dir,
                    RunOptions options) {
  return write_artifacts(spec, run_experiment(spec, {}, options), out_dir);
}

void write_manifest(std::ostream& out, const RunManifest& manifest) {
  out << "# run manifest: re-run with `plasmodium run --config manifest.txt`\n";
  for (const auto& s : manifest.settings) out << s.key << " = " << s.value << '\n';
  out << "rng.algorithm = " << manifest.rng_algorithm << '\n';
  for (const auto& a : manifest.artifacts)
    out << "artifact." << a.name << " = " << format_checksum(a.checksum) << '\n';
}

std::vector<Artifact> manifest_artifacts(const std::vector<Setting>& settings) {
  std::vector<Artifact> out;
  constexpr std::string_view kPrefix = "fnv1a64:";
  for (const auto& s : settings) {
    if (!s.key.starts_with("artifact.")) continue;
    if (!s.value.starts_with(kPrefix)) throw ConfigError(s.key + ": bad checksum format");
    const auto hex = std::string_view(s.value).substr(kPrefix.size());
    std::uint64_t v = 0;
    const auto [ptr, err] = std::from_chars(hex.data(), hex.data() + hex.size(), v, 16);
    if (err != std::errc{} || ptr != hex.data() + hex.size())
      throw ConfigError(s.key + ": bad checksum value");
    out.push_back({s.key.substr(std::string_view("artifact.").size()), v});
  }
  return out;
}

}  // namespace plasmodium
