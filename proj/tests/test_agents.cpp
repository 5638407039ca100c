#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "plasmodium/agents.hpp"
#include "plasmodium/errors.hpp"

using namespace plasmodium;

namespace {

const GridDims kDims{40, 30};

struct World {
  ChemoField field{kDims, 0.0};
  HabitabilityMask mask{kDims, 1};
  OccupancyGrid occupancy{kDims};
  MultiplierMap ones{kDims, 1.0};
};

Cell sensor_cell(Vec2 pos, double angle_deg, int offset) {
  const double r = angle_deg * std::numbers::pi / 180.0;
  return cell_of(wrap(Vec2{pos.x + offset * std::cos(r), pos.y + offset * std::sin(r)}, kDims));
}

}  // namespace

TEST_CASE("AgentParams defaults and validation") {
  const AgentParams p;
  CHECK(p.sensor_angle == 60.0);
  CHECK(p.rotation_angle == 60.0);
  CHECK(p.sensor_offset_min == 1);
  CHECK(p.sensor_offset_max == 20);
  CHECK(p.step_size == 1.0);
  CHECK(p.deposit == 5.0);
  CHECK_NOTHROW(p.validate());

  AgentParams bad = p;
  bad.sensor_offset_min = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = p;
  bad.sensor_offset_max = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = p;
  bad.step_size = 0.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = p;
  bad.deposit = -1.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("read_sensors samples the three offset positions") {
  World w;
  const Particle p{0, {20.5, 15.5}, 0.0};
  const Cell fl = sensor_cell(p.position, 60.0, 10);
  const Cell f = sensor_cell(p.position, 0.0, 10);
  const Cell fr = sensor_cell(p.position, -60.0, 10);
  CHECK(f == Cell{30, 15});
  w.field.at(fl.col, fl.row) = 1.0;
  w.field.at(f.col, f.row) = 2.0;
  w.field.at(fr.col, fr.row) = 3.0;
  const auto r = read_sensors(p, w.field, w.mask, AgentParams{}, 10, w.ones);
  CHECK(r == SensorReading{1.0, 2.0, 3.0});
}

TEST_CASE("read_sensors on a uniform field") {
  World w;
  w.field.fill(4.0);
  const Particle p{0, {1.5, 1.5}, 217.0};
  CHECK(read_sensors(p, w.field, w.mask, AgentParams{}, 20, w.ones) ==
        SensorReading{4.0, 4.0, 4.0});
}

TEST_CASE("read_sensors attenuates at the sensor's cell") {
  World w;
  w.field.fill(5.0);
  const Particle p{0, {10.5, 10.5}, 0.0};
  MultiplierMap sens(kDims, 1.0);
  const Cell f = sensor_cell(p.position, 0.0, 5);
  sens.at(f.col, f.row) = kAdverseAttenuation;
  // The particle's own cell being lit does not matter.
  sens.at(10, 10) = kAdverseAttenuation;
  const auto r = read_sensors(p, w.field, w.mask, AgentParams{}, 5, sens);
  CHECK(r.front == doctest::Approx(1.0));
  CHECK(r.left == 5.0);
  CHECK(r.right == 5.0);
}

TEST_CASE("read_sensors reads walls as zero and wraps") {
  World w;
  w.field.fill(2.0);
  const Particle p{0, {39.5, 5.5}, 0.0};
  w.mask.at(2, 5) = 0;  // front sensor lands at x = 42.5 -> column 2
  const auto r = read_sensors(p, w.field, w.mask, AgentParams{}, 3, w.ones);
  CHECK(r.front == 0.0);
  CHECK(r.left == 2.0);
}

TEST_CASE("steer examples") {
  const AgentParams params;
  CHECK(steer(90.0, {1, 5, 2}, params, false) == 90.0);
  CHECK(steer(0.0, {5, 1, 2}, params, true) == 60.0);
  CHECK(steer(0.0, {5, 1, 2}, params, false) == 300.0);
  CHECK(steer(0.0, {2, 3, 7}, params, false) == 300.0);
}

TEST_CASE("steering table over all 13 order patterns and both draws") {
  // Expected outcome per (FL, F, FR) rank pattern: K keep, R right (-RA),
  // L left (+RA), ? the coin decides.
  struct Row {
    int fl, f, fr;
    char outcome;
  };
  const Row table[] = {
      {0, 0, 0, 'K'}, {0, 1, 0, 'K'}, {1, 0, 1, '?'}, {0, 1, 1, 'R'}, {1, 1, 0, 'L'},
      {1, 0, 0, 'L'}, {0, 0, 1, 'R'}, {0, 1, 2, 'R'}, {2, 1, 0, 'L'}, {0, 2, 1, 'K'},
      {1, 2, 0, 'K'}, {1, 0, 2, '?'}, {2, 0, 1, '?'},
  };

  // The table must list every weak ordering of three values exactly once.
  int patterns = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        const int hi = std::max({a, b, c});
        bool dense = true;
        for (int v = 0; v <= hi; ++v) dense = dense && (a == v || b == v || c == v);
        if (!dense) continue;
        ++patterns;
        int found = 0;
        for (const auto& row : table) found += row.fl == a && row.f == b && row.fr == c;
        CHECK(found == 1);
      }
  CHECK(patterns == 13);

  AgentParams params;
  params.rotation_angle = 45.0;
  const double heading = 100.0;
  for (const auto& row : table) {
    // Scale ranks so ties stay ties but values are not tiny integers.
    const SensorReading r{row.fl * 1.5 + 0.25, row.f * 1.5 + 0.25, row.fr * 1.5 + 0.25};
    for (const bool coin : {false, true}) {
      CAPTURE(row.fl);
      CAPTURE(row.f);
      CAPTURE(row.fr);
      CAPTURE(coin);
      double expected = heading;
      switch (row.outcome) {
        case 'K': expected = heading; break;
        case 'R': expected = heading - 45.0; break;
        case 'L': expected = heading + 45.0; break;
        case '?': expected = coin ? heading + 45.0 : heading - 45.0; break;
      }
      CHECK(steer(heading, r, params, coin) == expected);
      CHECK((classify(r) == SteerRule::kRandomTurn) == (row.outcome == '?'));
    }
  }
}

TEST_CASE("steer is mirror symmetric") {
  const AgentParams params;
  const double values[] = {0.0, 1.0, 2.5, 2.5, 7.0};
  for (double fl : values)
    for (double f : values)
      for (double fr : values)
        for (const bool coin : {false, true})
          for (double heading : {0.0, 30.0, 359.0}) {
            const double a = steer(heading, {fl, f, fr}, params, coin) - heading;
            const double b = steer(heading, {fr, f, fl}, params, !coin) - heading;
            CHECK(normalize_heading(a + b) == 0.0);
          }
}

TEST_CASE("steer wraps headings into [0, 360)") {
  const AgentParams params;
  CHECK(steer(330.0, {5, 1, 1}, params, false) == 30.0);
  CHECK(steer(10.0, {1, 1, 5}, params, false) == 310.0);
}

TEST_CASE("motor_step advances and deposits into an empty cell") {
  World w;
  Rng rng(1);
  Particle p{7, {10.5, 10.5}, 0.0};
  w.occupancy.place({10, 10}, 7);
  const auto r = motor_step(p, w.occupancy, w.mask, w.field, AgentParams{}, w.ones, rng);
  CHECK(r.moved);
  CHECK(r.deposited == 5.0);
  CHECK(p.position == Vec2{11.5, 10.5});
  CHECK(w.field.at(11, 10) == 5.0);
  CHECK(w.occupancy.empty_at({10, 10}));
  CHECK(w.occupancy.at({11, 10}) == 7);
  CHECK(rng.draw_count() == 0);
}

TEST_CASE("motor_step is blocked by an occupied cell") {
  World w;
  Rng rng(2);
  Rng expected_rng(2);
  Particle p{0, {10.5, 10.5}, 90.0};
  w.occupancy.place({10, 10}, 0);
  w.occupancy.place({10, 11}, 1);
  const auto r = motor_step(p, w.occupancy, w.mask, w.field, AgentParams{}, w.ones, rng);
  CHECK_FALSE(r.moved);
  CHECK(p.position == Vec2{10.5, 10.5});
  CHECK(p.heading == expected_rng.angle());
  CHECK(field_mass(w.field) == 0.0);
  CHECK(w.occupancy.at({10, 10}) == 0);
  CHECK(w.occupancy.at({10, 11}) == 1);
  CHECK(rng.draw_count() == 1);
}

TEST_CASE("motor_step is blocked by a wall") {
  World w;
  Rng rng(3);
  w.mask.at(10, 11) = 0;
  Particle p{0, {10.5, 10.5}, 90.0};
  w.occupancy.place({10, 10}, 0);
  CHECK_FALSE(motor_step(p, w.occupancy, w.mask, w.field, AgentParams{}, w.ones, rng).moved);
  CHECK(p.position == Vec2{10.5, 10.5});
}

TEST_CASE("motor_step deposits 20% inside a lit region") {
  World w;
  Rng rng(4);
  MultiplierMap dep(kDims, 1.0);
  dep.at(11, 10) = kAdverseAttenuation;
  Particle p{0, {10.5, 10.5}, 0.0};
  w.occupancy.place({10, 10}, 0);
  const auto r = motor_step(p, w.occupancy, w.mask, w.field, AgentParams{}, dep, rng);
  CHECK(r.moved);
  CHECK(w.field.at(11, 10) == doctest::Approx(1.0));
}

TEST_CASE("motor_step within the same cell deposits without moving occupancy") {
  World w;
  Rng rng(5);
  Particle p{3, {10.9, 10.1}, 135.0};
  w.occupancy.place({10, 10}, 3);
  const auto r = motor_step(p, w.occupancy, w.mask, w.field, AgentParams{}, w.ones, rng);
  CHECK(r.moved);
  CHECK(cell_of(p.position) == Cell{10, 10});
  CHECK(p.position.x < 10.9);
  CHECK(w.field.at(10, 10) == 5.0);
  CHECK(w.occupancy.at({10, 10}) == 3);
}

TEST_CASE("motor_step wraps across the periodic edge") {
  World w;
  Rng rng(6);
  Particle p{0, {39.5, 0.5}, 0.0};
  w.occupancy.place({39, 0}, 0);
  CHECK(motor_step(p, w.occupancy, w.mask, w.field, AgentParams{}, w.ones, rng).moved);
  CHECK(p.position.x == doctest::Approx(0.5));
  CHECK(w.occupancy.at({0, 0}) == 0);
}

TEST_CASE("deposit accounting and exclusion over many random motor steps") {
  World w;
  Rng rng(77);
  MultiplierMap dep(kDims, 1.0);
  for (int y = 0; y < kDims.height; ++y)
    for (int x = 10; x < 20; ++x) dep.at(x, y) = kAdverseAttenuation;
  for (int x = 0; x < kDims.width; ++x) w.mask.at(x, 0) = w.mask.at(x, kDims.height - 1) = 0;

  std::vector<Particle> ps;
  for (int i = 0; i < 300; ++i) {
    Cell c{static_cast<int>(rng.below(kDims.width)), 1 + static_cast<int>(rng.below(28))};
    if (!w.occupancy.empty_at(c)) continue;
    const auto id = static_cast<std::int32_t>(ps.size());
    w.occupancy.place(c, id);
    ps.push_back({id, {c.col + 0.5, c.row + 0.5}, rng.angle()});
  }

  for (int round = 0; round < 50; ++round) {
    const double before = field_mass(w.field);
    double expected = 0.0;
    for (auto& p : ps) {
      const auto r = motor_step(p, w.occupancy, w.mask, w.field, AgentParams{}, dep, rng);
      if (r.moved) {
        const Cell c = cell_of(p.position);
        CHECK(r.deposited == AgentParams{}.deposit * dep.at(c.col, c.row));
      }
      expected += r.deposited;
    }
    CHECK(field_mass(w.field) - before == doctest::Approx(expected).epsilon(1e-12));
    for (const auto& p : ps) {
      const Cell c = cell_of(p.position);
      REQUIRE(w.mask.at(c.col, c.row) == 1);
      REQUIRE(w.occupancy.at(c) == p.id);
    }
  }
}
