#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "plasmodium/agents.hpp"
#include "plasmodium/lattice.hpp"
#include "plasmodium/rng.hpp"
#include "plasmodium/stimulus.hpp"

namespace plasmodium {

enum class ArenaKind {
  kFull,  // every cell habitable
  kTube,  // wall rows along the top and bottom edges
};

struct HabitabilitySpec {
  ArenaKind kind = ArenaKind::kFull;
  int wall_thickness = 1;
  friend bool operator==(const HabitabilitySpec&, const HabitabilitySpec&) = default;
};

[[nodiscard]] HabitabilityMask make_habitability_mask(const GridDims& dims,
                                                      const HabitabilitySpec& spec);

struct SimConfig {
  GridDims dims{300, 100};
  HabitabilitySpec habitability;
  int particle_count = 0;
  AgentParams agent;
  StimulusSchedule schedule;
  std::uint64_t seed = 0;
  std::int64_t total_steps = 0;
  std::int64_t sample_interval = 10;

  /// Throws ConfigError when any invariant fails.
  void validate() const;
};

/// Reusable per-step buffers. Not part of the observable state.
struct StepWorkspace {
  ChemoField next_field;
  DiffusionScratch diffusion;
  MultiplierMap attenuation;
  std::vector<std::uint32_t> order;
};

struct SimState {
  std::int64_t step_count = 0;
  ChemoField field;
  OccupancyGrid occupancy;
  HabitabilityMask mask;
  std::vector<Particle> particles;
  Rng rng;
  StepWorkspace workspace;

  /// Compares everything except the workspace.
  friend bool operator==(const SimState& a, const SimState& b) {
    return a.step_count == b.step_count && a.field == b.field && a.occupancy == b.occupancy &&
           a.mask == b.mask && a.particles == b.particles && a.rng == b.rng;
  }
};

/**
 * Builds the initial state. The RNG is seeded with config.seed; for each
 * particle in id order, cells are drawn with rng.below(cell count) until a
 * habitable empty one appears, then one rng.angle() draw sets its heading.
 * Particles sit at cell centres and the field starts at zero.
 */
[[nodiscard]] SimState init(const SimConfig& config);

/// Accounting for one step, used by the mass recurrence check.
struct StepReport {
  double stimulus_added = 0.0;
  double deposited = 0.0;
  double mass_before = 0.0;  // field mass before projection
  double mass_after = 0.0;   // field mass after diffusion
  std::size_t moves = 0;
  std::size_t random_turns = 0;
  std::size_t collisions = 0;
  std::uint64_t rng_draws = 0;
};

/**
 * Advances one scheduler step:
 *   1. project active attractant stimuli into the field
 *   2. rebuild the sensitivity/deposition attenuation map for this step
 *   3. shuffle particle indices with one Fisher-Yates pass
 *   4. per particle in shuffled order: draw the sensor offset, read the
 *      sensors, steer (coin draw only on a random turn), motor step
 *      (angle draw only on a collision)
 *   5. diffuse and damp
 *   6. increment the step counter
 */
StepReport step(SimState& state, const SimConfig& config);

/// FNV-1a over the step counter, field values, particle positions and
/// headings (IEEE-754 bit patterns, little-endian).
[[nodiscard]] std::uint64_t state_checksum(const SimState& state);

/// Throws InvariantViolation when the state breaks exclusion, bijection,
/// non-negativity, wall or wrapping invariants.
void check_invariants(const SimState& state, std::size_t expected_particles);

/// Observes snapshots of the state during run().
class Recorder {
 public:
  virtual ~Recorder() = default;
  virtual void observe(const SimState& state) = 0;
};

#ifdef NDEBUG
inline constexpr bool kCheckInvariantsByDefault = false;
#else
inline constexpr bool kCheckInvariantsByDefault = true;
#endif

struct RunOptions {
  /// Check state invariants after every step, and the field mass recurrence
  /// on fully habitable lattices.
  bool check_invariants = kCheckInvariantsByDefault;
};

struct RunResult {
  SimState final_state;
  std::size_t observations = 0;
};

/// init, then total_steps steps. Recorders observe the initial state and the
/// state after every sample_interval-th step.
RunResult run(const SimConfig& config, std::span<Recorder* const> recorders,
              RunOptions options = {});

}  // namespace plasmodium
