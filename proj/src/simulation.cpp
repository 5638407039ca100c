#include "plasmodium/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "plasmodium/checksum.hpp"
#include "plasmodium/errors.hpp"

namespace plasmodium {

HabitabilityMask make_habitability_mask(const GridDims& dims, const HabitabilitySpec& spec) {
  HabitabilityMask mask(dims, 1);
  if (spec.kind == ArenaKind::kTube) {
    for (int y = 0; y < dims.height; ++y) {
      if (y >= spec.wall_thickness && y < dims.height - spec.wall_thickness) continue;
      for (int x = 0; x < dims.width; ++x) mask.at(x, y) = 0;
    }
  }
  return mask;
}

namespace {

std::size_t habitable_count(const HabitabilityMask& mask) {
  return static_cast<std::size_t>(
      std::count_if(mask.cells().begin(), mask.cells().end(), [](auto v) { return v != 0; }));
}

}  // namespace

void SimConfig::validate() const {
  validate_lattice_dims(dims);
  if (habitability.kind == ArenaKind::kTube &&
      (habitability.wall_thickness < 0 || 2 * habitability.wall_thickness >= dims.height)) {
    throw ConfigError("habitability.wall_thickness leaves no habitable rows");
  }
  agent.validate();
  schedule.validate(dims);
  if (particle_count < 0) throw ConfigError("particle_count must be >= 0");
  if (total_steps < 0) throw ConfigError("total_steps must be >= 0");
  if (sample_interval < 1) throw ConfigError("sample_interval must be >= 1");
  const auto capacity = habitable_count(make_habitability_mask(dims, habitability));
  if (static_cast<std::size_t>(particle_count) > capacity) {
    throw ConfigError("particle_count " + std::to_string(particle_count) +
                      " exceeds habitable cells " + std::to_string(capacity));
  }
}

SimState init(const SimConfig& config) {
  config.validate();
  SimState s;
  s.field = ChemoField(config.dims, 0.0);
  s.occupancy = OccupancyGrid(config.dims);
  s.mask = make_habitability_mask(config.dims, config.habitability);
  s.rng = Rng(config.seed);
  s.particles.reserve(static_cast<std::size_t>(config.particle_count));

  const std::uint64_t cells = config.dims.cell_count();
  for (std::int32_t id = 0; id < config.particle_count; ++id) {
    Cell c;
    for (;;) {
      const auto i = s.rng.below(cells);
      c = {static_cast<int>(i % static_cast<std::uint64_t>(config.dims.width)),
           static_cast<int>(i / static_cast<std::uint64_t>(config.dims.width))};
      if (s.mask.at(c.col, c.row) != 0 && s.occupancy.empty_at(c)) break;
    }
    s.occupancy.place(c, id);
    s.particles.push_back({id, Vec2{c.col + 0.5, c.row + 0.5}, s.rng.angle()});
  }

  s.workspace.next_field = ChemoField(config.dims, 0.0);
  s.workspace.attenuation = MultiplierMap(config.dims, 1.0);
  return s;
}

StepReport step(SimState& state, const SimConfig& config) {
  StepReport report;
  const std::uint64_t draws_before = state.rng.draw_count();
  const AgentParams& params = config.agent;
  auto& ws = state.workspace;

  report.mass_before = field_mass(state.field);
  report.stimulus_added = project(config.schedule, state.step_count, state.field);

  if (ws.attenuation.dims() != config.dims) ws.attenuation = MultiplierMap(config.dims, 1.0);
  fill_attenuation_map(config.schedule, state.step_count, ws.attenuation);
  const MultiplierMap& sensitivity = ws.attenuation;
  const MultiplierMap& deposition = ws.attenuation;

  const auto n = static_cast<std::uint32_t>(state.particles.size());
  ws.order.resize(n);
  std::iota(ws.order.begin(), ws.order.end(), 0u);
  for (std::uint32_t i = n; i > 1; --i) {
    const auto j = static_cast<std::uint32_t>(state.rng.below(i));
    std::swap(ws.order[i - 1], ws.order[j]);
  }

  for (const std::uint32_t idx : ws.order) {
    Particle& p = state.particles[idx];
    const int offset = state.rng.uniform_int(params.sensor_offset_min, params.sensor_offset_max);
    const SensorReading reading =
        read_sensors(p, state.field, state.mask, params, offset, sensitivity);
    bool turn_left = false;
    if (classify(reading) == SteerRule::kRandomTurn) {
      turn_left = state.rng.coin();
      ++report.random_turns;
    }
    p.heading = steer(p.heading, reading, params, turn_left);

    const MotorResult m =
        motor_step(p, state.occupancy, state.mask, state.field, params, deposition, state.rng);
    if (m.moved) {
      ++report.moves;
      report.deposited += m.deposited;
    } else {
      ++report.collisions;
    }
  }

  diffuse_and_damp_into(state.field, state.mask, ws.next_field, ws.diffusion);
  std::swap(state.field, ws.next_field);
  ++state.step_count;

  report.mass_after = field_mass(state.field);
  report.rng_draws = state.rng.draw_count() - draws_before;
  return report;
}

std::uint64_t state_checksum(const SimState& state) {
  Fnv1a64 h;
  h.update_u64(static_cast<std::uint64_t>(state.step_count));
  for (const double v : state.field.cells()) h.update_double(v);
  for (const Particle& p : state.particles) {
    h.update_double(p.position.x);
    h.update_double(p.position.y);
    h.update_double(p.heading);
  }
  return h.value();
}

void check_invariants(const SimState& state, std::size_t expected_particles) {
  const auto fail = [](const std::string& what) { throw InvariantViolation(what); };
  if (state.particles.size() != expected_particles) fail("particle count changed");

  const GridDims& dims = state.field.dims();
  std::size_t occupied = 0;
  for (const auto id : state.occupancy.sites().cells()) {
    if (id != OccupancyGrid::kEmptySite) ++occupied;
  }
  if (occupied != state.particles.size()) fail("occupied cells do not match particle count");

  for (std::size_t i = 0; i < state.particles.size(); ++i) {
    const Particle& p = state.particles[i];
    if (p.id != static_cast<std::int32_t>(i)) fail("particle id out of order");
    if (!(p.position.x >= 0.0 && p.position.x < dims.width && p.position.y >= 0.0 &&
          p.position.y < dims.height)) {
      fail("particle " + std::to_string(i) + " outside the lattice");
    }
    if (!(p.heading >= 0.0 && p.heading < 360.0)) fail("heading not normalised");
    const Cell c = cell_of(p.position);
    if (state.mask.at(c.col, c.row) == 0) fail("particle on a wall cell");
    if (state.occupancy.at(c) != p.id) fail("occupancy does not match particle position");
  }

  for (std::size_t i = 0; i < state.field.size(); ++i) {
    if (!(state.field[i] >= 0.0)) fail("negative or NaN field value");
    if (state.mask[i] == 0 && state.field[i] != 0.0) fail("wall cell holds chemoattractant");
  }
}

namespace {

constexpr double kMassRecurrenceTolerance = 1e-9;

bool fully_habitable(const HabitabilityMask& mask) {
  return std::all_of(mask.cells().begin(), mask.cells().end(), [](auto v) { return v != 0; });
}

void check_mass_recurrence(const StepReport& r, std::int64_t step) {
  const double expected =
      kDampingFactor * (r.mass_before + r.stimulus_added + r.deposited);
  const double scale = std::max(std::abs(expected), 1.0);
  if (std::abs(r.mass_after - expected) > kMassRecurrenceTolerance * scale) {
    throw InvariantViolation("field mass recurrence broken at step " + std::to_string(step));
  }
}

}  // namespace

RunResult run(const SimConfig& config, std::span<Recorder* const> recorders,
              RunOptions options) {
  RunResult result{init(config), 0};
  SimState& state = result.final_state;
  const auto expected = static_cast<std::size_t>(config.particle_count);
  const bool check_mass = options.check_invariants && fully_habitable(state.mask);

  const auto observe = [&] {
    for (Recorder* r : recorders) r->observe(state);
    ++result.observations;
  };

  if (options.check_invariants) check_invariants(state, expected);
  observe();
  for (std::int64_t t = 0; t < config.total_steps; ++t) {
    const StepReport report = step(state, config);
    if (options.check_invariants) {
      check_invariants(state, expected);
      if (check_mass) check_mass_recurrence(report, state.step_count);
    }
    if (state.step_count % config.sample_interval == 0) observe();
  }
  return result;
}

}  // namespace plasmodium
