// Command line front end: canned experiments, seed sweeps and stimulus images.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "plasmodium/config.hpp"
#include "plasmodium/errors.hpp"
#include "plasmodium/experiments.hpp"
#include "plasmodium/pgm.hpp"
#include "plasmodium/stimulus.hpp"

namespace fs = std::filesystem;
using namespace plasmodium;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct RunArgs {
  std::string experiment;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string config;
  std::vector<std::string> overrides;
  bool check_invariants = false;
};

ExperimentParams resolve(const RunArgs& args) {
  std::vector<Setting> settings;
  if (!args.config.empty()) settings = parse_settings_file(args.config);
  for (const auto& o : args.overrides) settings.push_back(parse_override(o));
  std::optional<ExperimentKind> kind;
  if (!args.experiment.empty()) kind = parse_experiment_kind(args.experiment);
  const bool config_names_experiment =
      std::any_of(settings.begin(), settings.end(), [](const Setting& s) { return s.key == "experiment"; });
  if (!kind && !config_names_experiment)
    throw ConfigError("--experiment is required unless the config names one");
  ExperimentParams p = resolve_params(kind, settings);
  if (args.seed) p.seed = *args.seed;
  return p;
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto s = parse_uint("--seeds", text);
    return {s, s};
  }
  const auto a = parse_uint("--seeds", text.substr(0, dots));
  const auto b = parse_uint("--seeds", text.substr(dots + 2));
  if (b < a) throw ConfigError("--seeds: range end is before its start");
  return {a, b};
}

RunOptions options_for(const RunArgs& args) {
  RunOptions o;
  o.check_invariants = args.check_invariants || kCheckInvariantsByDefault;
  return o;
}

void add_run_options(CLI::App* cmd, RunArgs& args, bool seed_option) {
  cmd->add_option("--experiment", args.experiment, "li | la | chevreul | sbc | custom");
  if (seed_option) cmd->add_option("--seed", args.seed, "RNG seed");
  cmd->add_option("--out", args.out, "Output directory")->required();
  cmd->add_option("--config", args.config, "key = value config file");
  cmd->add_option("--override", args.overrides, "key=value, applied after --config")
      ->allow_extra_args(false)
      ->take_all();
  cmd->add_flag("--check-invariants", args.check_invariants,
                "Verify state invariants after every step");
}

int cmd_run(const RunArgs& args) {
  const ExperimentSpec spec = build_experiment(resolve(args));
  const RunManifest m = execute(spec, args.out, options_for(args));
  std::cout << "wrote " << m.artifacts.size() << " artifacts to " << args.out << '\n';
  return 0;
}

int cmd_sweep(const RunArgs& args, const std::string& seeds) {
  const auto [first, last] = parse_seed_range(seeds);
  ExperimentParams base = resolve(args);
  fs::create_directories(args.out);
  std::ofstream summary(fs::path(args.out) / "sweep.csv", std::ios::binary);
  if (!summary) throw IoError("cannot write sweep.csv");
  summary << "seed,final_step,final_range,directory\n";
  for (std::uint64_t seed = first;; ++seed) {
    base.seed = seed;
    const ExperimentSpec spec = build_experiment(base);
    const std::string dir = "seed_" + std::to_string(seed);
    const ExperimentResult r = run_experiment(spec, {}, options_for(args));
    write_artifacts(spec, r, fs::path(args.out) / dir);
    const auto& last_profile = r.record.profiles().back();
    summary << seed << ',' << last_profile.step << ',' << density_range(last_profile) << ','
            << dir << '\n';
    std::cout << "seed " << seed << " done\n";
    if (seed == last) break;
  }
  if (!summary) throw IoError("failed writing sweep.csv");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slime-mould particle model: lateral inhibition and brightness experiments"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run one experiment and write its artifacts");
  add_run_options(run, run_args, true);

  RunArgs sweep_args;
  std::string seeds;
  auto* sweep = app.add_subcommand("sweep", "Run an experiment for a range of seeds");
  add_run_options(sweep, sweep_args, false);
  sweep->add_option("--seeds", seeds, "Seed range a..b (inclusive)")->required();

  auto* image = app.add_subcommand("image", "Write a stimulus image as PGM");
  image->require_subcommand(1);
  std::string image_out;
  bool ascii = false;
  GridDims chevreul_dims{692, 288};
  ChevreulParams chevreul;
  auto* chev = image->add_subcommand("chevreul", "Chevreul staircase");
  chev->add_option("--width", chevreul_dims.width);
  chev->add_option("--height", chevreul_dims.height);
  chev->add_option("--bars", chevreul.n_bars);
  chev->add_option("--border", chevreul.border_width);
  chev->add_option("--min", chevreul.min_brightness);
  chev->add_option("--max", chevreul.max_brightness);
  GridDims sbc_dims{600, 300};
  SbcParams sbc;
  auto* sbc_cmd = image->add_subcommand("sbc", "Simultaneous brightness contrast");
  sbc_cmd->add_option("--width", sbc_dims.width);
  sbc_cmd->add_option("--height", sbc_dims.height);
  sbc_cmd->add_option("--left", sbc.left_brightness);
  sbc_cmd->add_option("--right", sbc.right_brightness);
  sbc_cmd->add_option("--band", sbc.band_brightness);
  sbc_cmd->add_option("--band-width", sbc.band_width);
  for (auto* sub : {chev, sbc_cmd}) {
    sub->add_option("--out", image_out, "Output .pgm")->required();
    sub->add_flag("--ascii", ascii, "Write P2 instead of P5");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run) return cmd_run(run_args);
    if (*sweep) return cmd_sweep(sweep_args, seeds);
    if (*image) {
      const auto format = ascii ? PgmFormat::kAscii : PgmFormat::kBinary;
      const StimulusImage img =
          *chev ? build_chevreul(chevreul_dims, chevreul) : build_sbc(sbc_dims, sbc);
      write_pgm(fs::path(image_out), img, format);
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}
