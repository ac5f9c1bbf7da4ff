// Experiment harness CLI.
//
//   dynpricer run <config.json> [--assert-gap] [--seed N] [--out DIR]
//   dynpricer describe <config.json>
//
// `run` executes the configured experiment and writes <out>/trace.csv and
// <out>/summary.json. Exit codes: 0 success, 1 error, 2 gap assertion
// failure.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dynpricer/experiment.hpp"

int main(int argc, char** argv) {
  CLI::App app{"dynamic posted-price welfare optimization experiments"};
  app.require_subcommand(1);

  std::string run_config, out_dir;
  std::uint64_t seed = 0;
  bool assert_gap = false, seed_set = false, out_set = false;

  CLI::App* run = app.add_subcommand("run", "execute an experiment config");
  run->add_option("config", run_config, "path to a config JSON file")->required();
  run->add_flag("--assert-gap", assert_gap, "exit 2 when the gap exceeds its tolerance");
  run->add_option("--seed", seed, "override the config seed")->each([&](const std::string&) {
    seed_set = true;
  });
  run->add_option("--out", out_dir, "override the output directory")
      ->each([&](const std::string&) { out_set = true; });

  std::string describe_config;
  CLI::App* describe = app.add_subcommand("describe", "print resolved hyperparameters");
  describe->add_option("config", describe_config, "path to a config JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      dynpricer::ExperimentConfig cfg = dynpricer::load_config(run_config);
      dynpricer::RunOptions options;
      options.assert_gap = assert_gap;
      if (seed_set) options.seed_override = seed;
      if (out_set) options.out_override = out_dir;
      dynpricer::RunRecord rec = dynpricer::run_experiment(cfg, options);
      std::cout << rec.summary_json;
      return rec.exit_code;
    }
    dynpricer::ExperimentConfig cfg = dynpricer::load_config(describe_config);
    std::cout << dynpricer::describe_experiment(cfg);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
