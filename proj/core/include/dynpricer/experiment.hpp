#pragma once

#include <optional>
#include <string>

#include "dynpricer/limited_supply.hpp"

namespace dynpricer {

// Config validation failure; message format is "<field>: <constraint>".
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Algorithm { BunToPrice, Owel, OwelUd, LimitedSupply, StructuralChecks };

std::string to_string(Algorithm a);

struct ExperimentParams {
  double alpha = 0.05;
  double delta = 0.1;
  std::optional<double> epsilon;
  std::optional<double> xi;
  std::optional<std::size_t> outer_iterations;
  std::optional<double> outer_step;
  double scale = 1e-3;
  std::optional<double> gap_tolerance;  // default depends on the algorithm
  BtpBudget budget;
  std::optional<Vec> target;  // buntoprice
  std::optional<Vec> price;   // limited-supply fixed-price policy
  std::size_t rounds = 10000;
  std::size_t runs = 50;
  std::size_t trials = 200;
  std::size_t mc_samples = 100000;
};

struct ExperimentConfig {
  int schema_version = 1;
  Algorithm algorithm = Algorithm::Owel;
  std::uint64_t seed = 0;
  std::string output_dir = "out";
  std::optional<bool> oracle;  // default on for dim <= 3
  MarketInstance market;
  ExperimentParams params;

  bool oracle_enabled() const { return oracle.value_or(market.dim() <= 3); }
};

ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const std::string& json_text);

struct RunOptions {
  bool assert_gap = false;
  std::optional<std::uint64_t> seed_override;
  std::optional<std::string> out_override;
};

// One row of trace.csv: iteration, bundle coords, price coords, cumulative
// query count, oracle welfare (empty when the oracle is disabled).
struct TraceRow {
  std::size_t iteration = 0;
  Vec bundle;
  Vec price;
  std::uint64_t queries_cumulative = 0;
  std::optional<double> oracle_welfare;
};

struct RunRecord {
  std::string config_hash;
  std::vector<TraceRow> trace;
  // summary fields
  std::uint64_t seed = 0;
  std::uint64_t query_count = 0;
  std::optional<double> benchmark;
  std::optional<double> achieved;
  std::optional<double> gap;
  double gap_tolerance = 0.0;
  bool pass = true;
  bool warning = false;
  std::optional<double> supply_violation;
  double runtime_seconds = 0.0;
  std::string summary_json;
  std::string trace_path, summary_path;
  int exit_code = 0;
};

// Executes the configured experiment, writes <out>/trace.csv and
// <out>/summary.json (atomic rename), and returns the record. Exit code 2
// signals a gap failure under assert_gap; errors throw.
RunRecord run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

// Resolved hyperparameters (theory-schedule defaults included) so the
// configured run is auditable without executing it.
std::string describe_experiment(const ExperimentConfig& config);

}  // namespace dynpricer
