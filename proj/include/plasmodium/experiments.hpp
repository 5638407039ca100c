#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plasmodium/checksum.hpp"
#include "plasmodium/config.hpp"
#include "plasmodium/measurement.hpp"
#include "plasmodium/simulation.hpp"
#include "plasmodium/stimulus.hpp"

namespace plasmodium {

enum class ExperimentKind { kLi, kLa, kChevreul, kSbc, kCustom };

[[nodiscard]] std::string_view to_string(ExperimentKind kind) noexcept;
/// Throws ConfigError for unknown names.
[[nodiscard]] ExperimentKind parse_experiment_kind(std::string_view name);

enum class StimulusShape {
  kNone,
  kUniform,   // attractant over a column band
  kAdverse,   // irradiation over a column band
  kChevreul,  // generated staircase image
  kSbc,       // generated brightness-contrast image
  kImage,     // greyscale PGM loaded from stimulus.image_path
};

/**
 * Every knob of an experiment, flat. Config keys map one-to-one onto these
 * fields (see apply_setting); the canned experiments are just defaults.
 */
struct ExperimentParams {
  ExperimentKind kind = ExperimentKind::kCustom;
  std::uint64_t seed = 0;
  GridDims dims{300, 100};
  HabitabilitySpec habitability{ArenaKind::kTube, 1};
  int particle_count = 8000;
  std::int64_t total_steps = 1000;
  std::int64_t sample_interval = 10;
  AgentParams agent;

  StimulusShape stimulus = StimulusShape::kNone;
  std::int64_t stimulus_start = 0;
  std::int64_t stimulus_end = 0;
  double stimulus_magnitude = kUniformAttractantPerStep;
  int stimulus_column_begin = 100;
  int stimulus_column_end = 200;
  std::string stimulus_image_path;
  ChevreulParams chevreul;
  SbcParams sbc;

  std::vector<std::int64_t> snapshot_steps;
  /// When positive, also emit the contrast series truncated at this step.
  std::int64_t contrast_view_end = 0;
};

[[nodiscard]] ExperimentParams default_params(ExperimentKind kind, std::uint64_t seed);

/// Applies one key. Throws ConfigError for unknown keys or bad values.
/// `experiment`, `rng.algorithm` and `artifact.*` are handled by resolve_params.
void apply_setting(ExperimentParams& params, const Setting& setting);

/**
 * Defaults for the experiment named by the last `experiment` setting (or
 * `fallback` when there is none), then every other setting in order.
 * `rng.algorithm` must name this build's generator; `artifact.*` keys are
 * accepted and ignored.
 */
[[nodiscard]] ExperimentParams resolve_params(std::optional<ExperimentKind> fallback,
                                              const std::vector<Setting>& settings);

/// All keys with their values, in a fixed order. Parses back to `params`.
[[nodiscard]] std::vector<Setting> to_settings(const ExperimentParams& params);

/// Fully built experiment: simulation config plus the regions analysis needs.
struct ExperimentSpec {
  ExperimentParams params;
  SimConfig config;
  /// Stimulus as a greyscale image (bands render as 255 on 0).
  StimulusImage stimulus_image;
  /// Stimulated columns for band stimuli; empty otherwise.
  std::optional<ColumnRange> stimulus_columns;
  /// Every bar between the side borders, left to right (chevreul).
  std::vector<ColumnRange> bars;
  /// Left and right bands (sbc).
  std::vector<ColumnRange> bands;
};

/// Throws ConfigError when the params do not describe a valid run.
[[nodiscard]] ExperimentSpec build_experiment(const ExperimentParams& params);

[[nodiscard]] ExperimentSpec make_li_experiment(std::uint64_t seed);
[[nodiscard]] ExperimentSpec make_la_experiment(std::uint64_t seed);
[[nodiscard]] ExperimentSpec make_chevreul_experiment(std::uint64_t seed);
[[nodiscard]] ExperimentSpec make_sbc_experiment(std::uint64_t seed);

/// Habitable cells of the stimulated band and of everything outside it.
struct BandRegions {
  CellMask inside;
  CellMask outside;
};

/// Throws ConfigError when the spec has no band stimulus.
[[nodiscard]] BandRegions band_regions(const ExperimentSpec& spec);

/// Keeps the occupancy state at chosen sample steps.
class SnapshotRecorder final : public Recorder {
 public:
  explicit SnapshotRecorder(std::vector<std::int64_t> steps) : steps_(std::move(steps)) {}
  void observe(const SimState& state) override;

  struct Snapshot {
    std::int64_t step = 0;
    Grid<std::uint8_t> image;
    DensityProfile profile;
  };
  [[nodiscard]] const std::vector<Snapshot>& snapshots() const noexcept { return snapshots_; }

 private:
  std::vector<std::int64_t> steps_;
  std::vector<Snapshot> snapshots_;
};

struct ExperimentResult {
  DensityRecord record;
  std::vector<SnapshotRecorder::Snapshot> snapshots;
  SimState final_state;
};

/// Runs the simulation with density and snapshot recorders attached, plus
/// any `extra` recorders.
[[nodiscard]] ExperimentResult run_experiment(const ExperimentSpec& spec,
                                              std::span<Recorder* const> extra = {},
                                              RunOptions options = {});

struct Artifact {
  std::string name;
  std::uint64_t checksum = 0;
  friend bool operator==(const Artifact&, const Artifact&) = default;
};

struct RunManifest {
  std::vector<Setting> settings;
  std::string rng_algorithm;
  std::vector<Artifact> artifacts;
};

/// FNV-1a 64 of a file's bytes.
[[nodiscard]] std::uint64_t file_checksum(const std::filesystem::path& path);

/**
 * Writes the artifacts of a finished run into `out_dir` (created if
 * missing): density.csv, contrast.csv, spacetime.pgm, stimulus.pgm,
 * snapshot_t{N}.pgm and profile_t{N}.csv per snapshot, contrast_view.csv
 * when requested, and manifest.txt. Throws IoError on write failures.
 */
RunManifest write_artifacts(const ExperimentSpec& spec, const ExperimentResult& result,
                            const std::filesystem::path& out_dir);

/// run_experiment followed by write_artifacts.
RunManifest execute(const ExperimentSpec& spec, const std::filesystem::path& out_dir,
                    RunOptions options = {});

/// Manifest text: the resolved settings, the RNG identity and one
/// `artifact.<file> = fnv1a64:<hex>` line per artifact.
void write_manifest(std::ostream& out, const RunManifest& manifest);

/// Reads `artifact.*` lines back out of a manifest.
[[nodiscard]] std::vector<Artifact> manifest_artifacts(const std::vector<Setting>& settings);

}  // namespace plasmodium
