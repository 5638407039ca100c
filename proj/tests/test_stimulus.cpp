#include <doctest.h>

#include <random>
#include <sstream>

#include "plasmodium/errors.hpp"
#include "plasmodium/pgm.hpp"
#include "plasmodium/stimulus.hpp"

using namespace plasmodium;

TEST_CASE("uniform attractant adds 1.275 per step inside its region") {
  const GridDims dims{30, 10};
  StimulusSchedule s;
  s.events.push_back(StimulusEvent::uniform(column_band_mask(dims, 10, 20), 5, 8));
  ChemoField f(dims, 0.0);

  CHECK(project(s, 4, f) == 0.0);
  const double added = project(s, 5, f);
  CHECK(f.at(12, 3) == 1.275);
  CHECK(f.at(9, 3) == 0.0);
  CHECK(added == doctest::Approx(1.275 * 100));

  ChemoField g(dims, 0.0);
  CHECK(project(s, 8, g) == 0.0);
  CHECK(field_mass(g) == 0.0);
}

TEST_CASE("image attractant adds brightness x 0.01") {
  const GridDims dims{8, 8};
  StimulusImage img(dims, 0);
  img.at(2, 3) = 255;
  img.at(4, 4) = 200;
  StimulusSchedule s;
  s.events.push_back(StimulusEvent::from_image(img, 0, 10));
  ChemoField f(dims, 1.0);
  project(s, 0, f);
  CHECK(f.at(2, 3) == doctest::Approx(3.55));
  CHECK(f.at(4, 4) == doctest::Approx(3.0));
  CHECK(f.at(0, 0) == 1.0);
}

TEST_CASE("adverse events add nothing and attenuate to 0.2 without compounding") {
  const GridDims dims{30, 6};
  StimulusSchedule s;
  s.events.push_back(StimulusEvent::adverse(column_band_mask(dims, 10, 20), 0, 100));
  s.events.push_back(StimulusEvent::adverse(column_band_mask(dims, 15, 25), 50, 100));
  ChemoField f(dims, 0.0);
  CHECK(project(s, 60, f) == 0.0);

  const auto sens = sensitivity_map(s, 60, dims);
  CHECK(sens.at(5, 0) == 1.0);
  CHECK(sens.at(12, 0) == 0.2);
  CHECK(sens.at(17, 3) == 0.2);
  CHECK(sens.at(22, 3) == 0.2);
  CHECK(sens.at(25, 3) == 1.0);
  CHECK(deposition_map(s, 60, dims) == sens);

  const auto early = deposition_map(s, 10, dims);
  CHECK(early.at(22, 0) == 1.0);
  CHECK(early.at(10, 0) == 0.2);

  const auto expired = deposition_map(s, 100, dims);
  for (double v : expired.cells()) CHECK(v == 1.0);
}

TEST_CASE("empty schedule leaves the field alone") {
  const GridDims dims{9, 9};
  ChemoField f(dims, 0.0);
  f.at(3, 3) = 2.0;
  const ChemoField before = f;
  CHECK(project(StimulusSchedule{}, 17, f) == 0.0);
  CHECK(f == before);
  const auto sens = sensitivity_map(StimulusSchedule{}, 0, dims);
  for (double v : sens.cells()) CHECK(v == 1.0);
}

TEST_CASE("project never decreases a cell") {
  const GridDims dims{20, 12};
  std::mt19937 gen(1);
  StimulusImage img(dims);
  for (auto& px : img.cells()) px = static_cast<std::uint8_t>(gen() % 256);
  StimulusSchedule s;
  s.events.push_back(StimulusEvent::from_image(img, 0, 5));
  s.events.push_back(StimulusEvent::uniform(column_band_mask(dims, 3, 9), 2, 4, 0.5));
  s.events.push_back(StimulusEvent::adverse(column_band_mask(dims, 0, 20), 0, 5));
  for (int t = 0; t < 6; ++t) {
    ChemoField f(dims, 0.0);
    for (auto& v : f.cells()) v = (gen() % 1000) / 10.0;
    const ChemoField before = f;
    project(s, t, f);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(f[i] >= before[i]);
  }
}

TEST_CASE("dimension mismatches are configuration errors") {
  StimulusSchedule s;
  s.events.push_back(StimulusEvent::uniform(CellMask(GridDims{10, 10}, 1), 0, 5));
  ChemoField f(GridDims{12, 10}, 0.0);
  CHECK_THROWS_AS(project(s, 0, f), ConfigError);
  CHECK_THROWS_AS(s.validate(GridDims{12, 10}), ConfigError);
  StimulusSchedule backwards;
  backwards.events.push_back(StimulusEvent::uniform(CellMask(GridDims{10, 10}, 1), 5, 4));
  CHECK_THROWS_AS(backwards.validate(GridDims{10, 10}), ConfigError);
}

TEST_CASE("default Chevreul staircase") {
  const GridDims dims{692, 288};
  const ChevreulParams params;
  const auto img = build_chevreul(dims, params);
  const auto bars = chevreul_bars(dims, params);
  REQUIRE(bars.size() == 8);
  const int expected[] = {25, 50, 75, 100, 125, 150, 175, 200};
  for (int k = 0; k < 8; ++k) {
    CHECK(bars[k].size() == 74);
    CHECK(chevreul_bar_brightness(params, k) == expected[k]);
    for (int x = bars[k].begin; x < bars[k].end; x += 7)
      for (int y = 0; y < 288; y += 31) CHECK(img.at(x, y) == expected[k]);
  }
  CHECK(bars.front().begin == 50);
  CHECK(bars.back().end == 642);
  for (int x = 0; x < 50; ++x) {
    CHECK(img.at(x, 100) == 0);
    CHECK(img.at(691 - x, 100) == 0);
  }
}

TEST_CASE("Chevreul cross-section is a non-decreasing staircase") {
  for (int n : {2, 3, 5, 8, 13}) {
    const GridDims dims{401, 20};
    ChevreulParams p{n, 30, 10, 240};
    const auto img = build_chevreul(dims, p);
    const auto bars = chevreul_bars(dims, p);
    CHECK(bars.back().end == 401 - 30);  // leftover columns join the last bar
    int prev = -1;
    for (int x = p.border_width; x < dims.width - p.border_width; ++x) {
      CHECK(img.at(x, 0) >= prev);
      prev = img.at(x, 0);
    }
  }
  const auto two = build_chevreul(GridDims{100, 10}, ChevreulParams{2, 10, 0, 255});
  CHECK(two.at(20, 0) == 0);
  CHECK(two.at(80, 0) == 255);
}

TEST_CASE("Chevreul geometry errors") {
  CHECK_THROWS_AS((void)build_chevreul(GridDims{100, 10}, ChevreulParams{1, 10, 0, 255}),
                  ConfigError);
  CHECK_THROWS_AS((void)build_chevreul(GridDims{20, 10}, ChevreulParams{8, 10, 0, 255}),
                  ConfigError);
  CHECK_THROWS_AS((void)build_chevreul(GridDims{200, 10}, ChevreulParams{8, 10, 0, 256}),
                  ConfigError);
}

TEST_CASE("default SBC image") {
  const GridDims dims{600, 300};
  const SbcParams params;
  const auto img = build_sbc(dims, params);
  const auto [left, right] = sbc_bands(dims, params);
  CHECK(left == ColumnRange{120, 180});
  CHECK(right == ColumnRange{420, 480});
  CHECK(img.at(150, 10) == 128);
  CHECK(img.at(450, 10) == 128);
  CHECK(img.at(50, 200) == 64);
  CHECK(img.at(550, 200) == 192);
  for (int y = 0; y < 300; ++y)
    for (int dx = 0; dx < 60; ++dx) REQUIRE(img.at(120 + dx, y) == img.at(420 + dx, y));
}

TEST_CASE("SBC cross-section is mirror-complement symmetric for complementary surrounds") {
  const GridDims dims{200, 8};
  const auto img = build_sbc(dims, SbcParams{50, 206, 128, 20});
  for (int x = 0; x < 200; ++x) CHECK(img.at(x, 0) + img.at(199 - x, 0) == 256);
}

TEST_CASE("SBC errors") {
  CHECK_THROWS_AS((void)build_sbc(GridDims{100, 10}, SbcParams{64, 64, 128, 10}), ConfigError);
  CHECK_THROWS_AS((void)build_sbc(GridDims{100, 10}, SbcParams{64, 192, 128, 51}), ConfigError);
}

TEST_CASE("PGM round trip in both formats") {
  std::mt19937 gen(5);
  for (int trial = 0; trial < 10; ++trial) {
    const GridDims dims{1 + static_cast<int>(gen() % 40), 1 + static_cast<int>(gen() % 40)};
    GreyImage img(dims);
    for (auto& px : img.cells()) px = static_cast<std::uint8_t>(gen() % 256);
    for (const auto format : {PgmFormat::kBinary, PgmFormat::kAscii}) {
      std::stringstream buf(std::ios::in | std::ios::out | std::ios::binary);
      write_pgm(buf, img, format);
      CHECK(read_pgm(buf) == img);
    }
  }
}

TEST_CASE("PGM header layout and comments") {
  GreyImage img(GridDims{2, 1});
  img.at(0, 0) = 7;
  img.at(1, 0) = 255;
  std::ostringstream out;
  write_pgm(out, img, PgmFormat::kAscii);
  CHECK(out.str() == "P2\n2 1\n255\n7 255\n");

  std::istringstream commented("P2\n# made by hand\n2 1\n# max\n255\n7 255\n");
  CHECK(read_pgm(commented) == img);
}

TEST_CASE("PGM rejects malformed input") {
  std::istringstream bad_magic("P6\n1 1\n255\n\x01");
  CHECK_THROWS_AS((void)read_pgm(bad_magic), ConfigError);
  std::istringstream bad_max("P2\n1 1\n65535\n1\n");
  CHECK_THROWS_AS((void)read_pgm(bad_max), ConfigError);
  std::istringstream truncated("P5\n4 4\n255\nabc");
  CHECK_THROWS_AS((void)read_pgm(truncated), ConfigError);
  CHECK_THROWS_AS((void)read_pgm(std::filesystem::path("/nonexistent/x.pgm")), IoError);
}
