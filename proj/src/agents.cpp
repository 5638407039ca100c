#include "plasmodium/agents.hpp"

#include <cmath>
#include <numbers>

#include "plasmodium/errors.hpp"

namespace plasmodium {

void AgentParams::validate() const {
  if (sensor_offset_min < 1) throw ConfigError("agent.sensor_offset_min must be >= 1");
  if (sensor_offset_max < sensor_offset_min)
    throw ConfigError("agent.sensor_offset_max must be >= agent.sensor_offset_min");
  if (!(step_size > 0.0)) throw ConfigError("agent.step_size must be > 0");
  if (!(deposit >= 0.0)) throw ConfigError("agent.deposit must be >= 0");
  if (!std::isfinite(sensor_angle) || !std::isfinite(rotation_angle))
    throw ConfigError("agent angles must be finite");
}

double normalize_heading(double degrees) noexcept { return wrap(degrees, 360.0); }

Vec2 heading_vector(double heading) noexcept {
  const double rad = heading * (std::numbers::pi / 180.0);
  return {std::cos(rad), std::sin(rad)};
}

namespace {

double sense_at(Vec2 origin, Vec2 dir, int offset, const ChemoField& field,
                const HabitabilityMask& mask, const MultiplierMap& sensitivity) noexcept {
  const Vec2 at = wrap(Vec2{origin.x + offset * dir.x, origin.y + offset * dir.y}, field.dims());
  const Cell c = cell_of(at);
  if (mask.at(c.col, c.row) == 0) return 0.0;
  return field.at(c.col, c.row) * sensitivity.at(c.col, c.row);
}

}  // namespace

SensorReading read_sensors(const Particle& p, const ChemoField& field,
                           const HabitabilityMask& mask, const AgentParams& params,
                           int offset, const MultiplierMap& sensitivity) noexcept {
  // Side sensors are the front direction rotated by +/-SA.
  const Vec2 front = heading_vector(p.heading);
  const Vec2 turn = heading_vector(params.sensor_angle);
  const Vec2 left{front.x * turn.x - front.y * turn.y, front.y * turn.x + front.x * turn.y};
  const Vec2 right{front.x * turn.x + front.y * turn.y, front.y * turn.x - front.x * turn.y};
  return {
      sense_at(p.position, left, offset, field, mask, sensitivity),
      sense_at(p.position, front, offset, field, mask, sensitivity),
      sense_at(p.position, right, offset, field, mask, sensitivity),
  };
}

SteerRule classify(const SensorReading& r) noexcept {
  if (r.front > r.left && r.front > r.right) return SteerRule::kKeepFrontStrongest;
  if (r.front < r.left && r.front < r.right) return SteerRule::kRandomTurn;
  if (r.left < r.right) return SteerRule::kTurnRight;
  if (r.right < r.left) return SteerRule::kTurnLeft;
  return SteerRule::kKeepTied;
}

double steer(double heading, const SensorReading& r, const AgentParams& params,
             bool turn_left) noexcept {
  switch (classify(r)) {
    case SteerRule::kRandomTurn:
      return normalize_heading(turn_left ? heading + params.rotation_angle
                                         : heading - params.rotation_angle);
    case SteerRule::kTurnRight:
      return normalize_heading(heading - params.rotation_angle);
    case SteerRule::kTurnLeft:
      return normalize_heading(heading + params.rotation_angle);
    case SteerRule::kKeepFrontStrongest:
    case SteerRule::kKeepTied:
      break;
  }
  return heading;
}

MotorResult motor_step(Particle& p, OccupancyGrid& occupancy, const HabitabilityMask& mask,
                       ChemoField& field, const AgentParams& params,
                       const MultiplierMap& deposition, Rng& rng) noexcept {
  const Vec2 dir = heading_vector(p.heading);
  const Vec2 candidate = wrap(
      Vec2{p.position.x + params.step_size * dir.x, p.position.y + params.step_size * dir.y},
      field.dims());
  const Cell from = cell_of(p.position);
  const Cell to = cell_of(candidate);

  if (to != from) {
    if (mask.at(to.col, to.row) == 0 || !occupancy.empty_at(to)) {
      p.heading = rng.angle();
      return {};
    }
    occupancy.move(from, to);
  }
  p.position = candidate;
  const double amount = params.deposit * deposition.at(to.col, to.row);
  field.at(to.col, to.row) += amount;
  return {true, amount};
}

}  // namespace plasmodium
