#pragma once

#include <cstdint>

#include "plasmodium/lattice.hpp"
#include "plasmodium/rng.hpp"

namespace plasmodium {

/// One agent of the virtual plasmodium. Heading is in degrees, [0, 360),
/// counter-clockwise on (x, y).
struct Particle {
  std::int32_t id = 0;
  Vec2 position;
  double heading = 0.0;
  friend bool operator==(const Particle&, const Particle&) = default;
};

struct AgentParams {
  double sensor_angle = 60.0;
  double rotation_angle = 60.0;
  int sensor_offset_min = 1;
  int sensor_offset_max = 20;
  double step_size = 1.0;
  double deposit = 5.0;

  /// Throws ConfigError on out-of-range values.
  void validate() const;
  friend bool operator==(const AgentParams&, const AgentParams&) = default;
};

/// Attenuation applied to sensing and deposition inside lit regions.
inline constexpr double kAdverseAttenuation = 0.2;

struct SensorReading {
  double left = 0.0;
  double front = 0.0;
  double right = 0.0;
  friend bool operator==(const SensorReading&, const SensorReading&) = default;
};

/// Reduces any angle in degrees into [0, 360).
[[nodiscard]] double normalize_heading(double degrees) noexcept;

/// Unit step along `heading` degrees.
[[nodiscard]] Vec2 heading_vector(double heading) noexcept;

/// Samples FL, F and FR at `offset` pixels along heading+SA, heading and
/// heading-SA. Each value is scaled by `sensitivity` at the sensor's cell.
[[nodiscard]] SensorReading read_sensors(const Particle& p, const ChemoField& field,
                                         const HabitabilityMask& mask,
                                         const AgentParams& params, int offset,
                                         const MultiplierMap& sensitivity) noexcept;

/// Which branch of the steering table a reading selects.
enum class SteerRule {
  kKeepFrontStrongest,  // F > FL and F > FR
  kRandomTurn,          // F < FL and F < FR
  kTurnRight,           // FL < FR
  kTurnLeft,            // FR < FL
  kKeepTied,            // everything else
};

[[nodiscard]] SteerRule classify(const SensorReading& r) noexcept;

/// New heading for a reading. `turn_left` only matters for kRandomTurn and
/// should come from one fair coin draw taken only in that case.
/// Left is heading + RA, right is heading - RA.
[[nodiscard]] double steer(double heading, const SensorReading& r, const AgentParams& params,
                           bool turn_left) noexcept;

struct MotorResult {
  bool moved = false;
  double deposited = 0.0;
};

/**
 * Attempts one forward step.
 *
 * Landing in the particle's own cell counts as a move. Landing in an empty
 * habitable cell moves the occupancy entry. Both deposit
 * `params.deposit * deposition(destination)` at the destination. A blocked
 * step (occupied or wall) leaves position and field untouched and replaces
 * the heading with one rng.angle() draw.
 */
MotorResult motor_step(Particle& p, OccupancyGrid& occupancy, const HabitabilityMask& mask,
                       ChemoField& field, const AgentParams& params,
                       const MultiplierMap& deposition, Rng& rng) noexcept;

}  // namespace plasmodium
