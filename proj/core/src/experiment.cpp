#include "dynpricer/experiment.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dynpricer/ground_truth.hpp"
#include "dynpricer/market_ground_truth.hpp"

namespace dynpricer {

using nlohmann::json;

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::BunToPrice:
      return "buntoprice";
    case Algorithm::Owel:
      return "owel";
    case Algorithm::OwelUd:
      return "owel-ud";
    case Algorithm::LimitedSupply:
      return "limited-supply";
    case Algorithm::StructuralChecks:
      return "structural-checks";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& constraint) {
  throw ConfigError(field + ": " + constraint);
}

const json& require(const json& j, const std::string& field, const std::string& path) {
  if (!j.contains(field)) fail(path.empty() ? field : path + "." + field, "required");
  return j.at(field);
}

double require_number(const json& j, const std::string& field, const std::string& path) {
  const json& v = require(j, field, path);
  if (!v.is_number()) fail(path.empty() ? field : path + "." + field, "must be a number");
  return v.get<double>();
}

Vec require_vec(const json& j, const std::string& field, const std::string& path) {
  const json& v = require(j, field, path);
  std::string full = path.empty() ? field : path + "." + field;
  if (!v.is_array() || v.empty()) fail(full, "must be a non-empty array of numbers");
  Vec out;
  for (const auto& x : v) {
    if (!x.is_number()) fail(full, "must be a non-empty array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

Vec optional_vec(const json& j, const std::string& field, const std::string& path, bool* present) {
  if (!j.contains(field)) {
    *present = false;
    return {};
  }
  *present = true;
  return require_vec(j, field, path);
}

FeasibleSet parse_feasible(const json& j) {
  std::string type = require(j, "type", "market.feasible").get<std::string>();
  if (type == "box") {
    return FeasibleSet::box(require_vec(j, "lower", "market.feasible"),
                            require_vec(j, "upper", "market.feasible"));
  }
  if (type == "simplex") {
    const json& d = require(j, "dim", "market.feasible");
    if (!d.is_number_unsigned()) fail("market.feasible.dim", "must be a positive integer");
    return FeasibleSet::simplex(d.get<std::size_t>());
  }
  fail("market.feasible.type", "must be \"box\" or \"simplex\"");
}

Valuation parse_valuation(const json& j, const FeasibleSet& feasible, std::size_t index) {
  const std::string path = "market.types[" + std::to_string(index) + "].valuation";
  std::string kind = require(j, "kind", path).get<std::string>();
  if (kind == "separable_power") {
    return Valuation::separable_power(require_vec(j, "a", path), require_number(j, "exponent", path),
                                      feasible);
  }
  if (kind == "quadratic") {
    const json& q = require(j, "q", path);
    if (!q.is_array()) fail(path + ".q", "must be a square matrix");
    std::vector<Vec> rows;
    for (const auto& row : q) {
      Vec r;
      for (const auto& x : row) r.push_back(x.get<double>());
      rows.push_back(std::move(r));
    }
    return Valuation::quadratic(require_vec(j, "a", path), SymMatrix::from_rows(rows), feasible);
  }
  if (kind == "linear_unit_demand") {
    return Valuation::linear_unit_demand(require_vec(j, "values", path));
  }
  fail(path + ".kind", "must be one of separable_power, quadratic, linear_unit_demand");
}

MarketInstance parse_market(const json& j) {
  const json& mj = require(j, "market", "");
  FeasibleSet feasible = parse_feasible(require(mj, "feasible", "market"));
  Vec costs = require_vec(mj, "costs", "market");
  Vec supply = require_vec(mj, "supply", "market");
  const json& types = require(mj, "types", "market");
  if (!types.is_array() || types.empty()) fail("market.types", "must be a non-empty array");
  std::vector<Valuation> valuations;
  Vec weights;
  for (std::size_t i = 0; i < types.size(); ++i) {
    const std::string path = "market.types[" + std::to_string(i) + "]";
    weights.push_back(require_number(types[i], "weight", path));
    valuations.push_back(parse_valuation(require(types[i], "valuation", path), feasible, i));
  }
  double vmax = mj.contains("vmax") ? require_number(mj, "vmax", "market") : 1.0;
  try {
    return MarketInstance(BuyerDistribution(std::move(valuations), std::move(weights)),
                          CostVector(std::move(costs)), SupplyVector(std::move(supply)),
                          std::move(feasible), vmax);
  } catch (const std::invalid_argument& e) {
    fail("market", e.what());
  }
}

BtpBudget parse_budget(const json& p) {
  BtpBudget b;
  if (!p.contains("budget")) return b;
  const json& j = p.at("budget");
  if (j.contains("restarts")) b.restarts = j.at("restarts").get<std::size_t>();
  if (j.contains("descent_iterations"))
    b.descent_iterations = j.at("descent_iterations").get<std::size_t>();
  if (j.contains("validation_samples"))
    b.validation_samples = j.at("validation_samples").get<std::size_t>();
  if (j.contains("step")) b.step = j.at("step").get<double>();
  if (j.contains("scale")) b.scale = j.at("scale").get<double>();
  if (j.contains("t1_constant")) b.t1_constant = j.at("t1_constant").get<double>();
  if (j.contains("max_queries")) b.max_queries = j.at("max_queries").get<std::uint64_t>();
  return b;
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, ptr);
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

std::string trace_to_csv(const std::vector<TraceRow>& rows, std::size_t bundle_dim,
                         std::size_t price_dim) {
  std::ostringstream out;
  out << "iteration";
  for (std::size_t j = 0; j < bundle_dim; ++j) out << ",x" << j;
  for (std::size_t j = 0; j < price_dim; ++j) out << ",p" << j;
  out << ",queries_cumulative,oracle_welfare\n";
  for (const TraceRow& r : rows) {
    out << r.iteration;
    for (std::size_t j = 0; j < bundle_dim; ++j)
      out << ',' << (j < r.bundle.size() ? format_double(r.bundle[j]) : "");
    for (std::size_t j = 0; j < price_dim; ++j)
      out << ',' << (j < r.price.size() ? format_double(r.price[j]) : "");
    out << ',' << r.queries_cumulative << ',';
    if (r.oracle_welfare) out << format_double(*r.oracle_welfare);
    out << '\n';
  }
  return out.str();
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON (") + e.what() + ")");
  }
  const json& sv = require(j, "schema_version", "");
  if (!sv.is_number_integer() || sv.get<int>() != 1)
    fail("schema_version", "must be the integer 1");

  std::string alg = require(j, "algorithm", "").get<std::string>();
  Algorithm algorithm;
  if (alg == "buntoprice")
    algorithm = Algorithm::BunToPrice;
  else if (alg == "owel")
    algorithm = Algorithm::Owel;
  else if (alg == "owel-ud")
    algorithm = Algorithm::OwelUd;
  else if (alg == "limited-supply")
    algorithm = Algorithm::LimitedSupply;
  else if (alg == "structural-checks")
    algorithm = Algorithm::StructuralChecks;
  else
    fail("algorithm",
         "must be one of buntoprice, owel, owel-ud, limited-supply, structural-checks");

  const json& seed_j = require(j, "seed", "");
  if (!seed_j.is_number_unsigned()) fail("seed", "must be an unsigned integer");

  ExperimentConfig cfg{.schema_version = 1,
                       .algorithm = algorithm,
                       .seed = seed_j.get<std::uint64_t>(),
                       .market = parse_market(j)};
  if (j.contains("output")) cfg.output_dir = j.at("output").get<std::string>();
  if (j.contains("oracle")) cfg.oracle = j.at("oracle").get<bool>();

  const json& p = j.contains("params") ? j.at("params") : json::object();
  ExperimentParams& ep = cfg.params;
  if (p.contains("alpha")) ep.alpha = require_number(p, "alpha", "params");
  if (p.contains("delta")) ep.delta = require_number(p, "delta", "params");
  if (p.contains("epsilon")) ep.epsilon = require_number(p, "epsilon", "params");
  if (p.contains("xi")) ep.xi = require_number(p, "xi", "params");
  if (p.contains("outer_iterations"))
    ep.outer_iterations = p.at("outer_iterations").get<std::size_t>();
  if (p.contains("outer_step")) ep.outer_step = require_number(p, "outer_step", "params");
  if (p.contains("scale")) ep.scale = require_number(p, "scale", "params");
  if (p.contains("gap_tolerance")) ep.gap_tolerance = require_number(p, "gap_tolerance", "params");
  ep.budget = parse_budget(p);
  bool present = false;
  Vec target = optional_vec(p, "target", "params", &present);
  if (present) ep.target = std::move(target);
  Vec price = optional_vec(p, "price", "params", &present);
  if (present) ep.price = std::move(price);
  if (p.contains("rounds")) ep.rounds = p.at("rounds").get<std::size_t>();
  if (p.contains("runs")) ep.runs = p.at("runs").get<std::size_t>();
  if (p.contains("trials")) ep.trials = p.at("trials").get<std::size_t>();
  if (p.contains("mc_samples")) ep.mc_samples = p.at("mc_samples").get<std::size_t>();

  // Cross-field requirements.
  if (algorithm == Algorithm::BunToPrice) {
    if (!ep.target) fail("params.target", "required");
    if (!ep.epsilon) fail("params.epsilon", "required");
    if (ep.target->size() != cfg.market.dim()) fail("params.target", "dimension mismatch");
  }
  if (algorithm == Algorithm::LimitedSupply) {
    if (!ep.price) fail("params.price", "required");
    if (ep.price->size() != cfg.market.dim()) fail("params.price", "dimension mismatch");
  }
  if (algorithm == Algorithm::OwelUd && cfg.market.mode() != MarketMode::UnitDemand)
    fail("market", "owel-ud requires a unit-demand market");
  if ((algorithm == Algorithm::Owel || algorithm == Algorithm::StructuralChecks) &&
      cfg.market.mode() != MarketMode::Divisible)
    fail("market", to_string(algorithm) + " requires a divisible-goods market");
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

namespace {

OwelConfig make_owel_config(const ExperimentParams& ep, double alpha) {
  OwelConfig cfg;
  cfg.alpha = alpha;
  cfg.delta = ep.delta;
  cfg.xi = ep.xi;
  cfg.eps = ep.epsilon;
  cfg.outer_iterations = ep.outer_iterations;
  cfg.outer_step = ep.outer_step;
  cfg.scale = ep.scale;
  cfg.btp = ep.budget;
  return cfg;
}

struct AlgoOutput {
  std::vector<TraceRow> trace;
  std::uint64_t query_count = 0;
  std::optional<double> benchmark, achieved, gap, supply_violation;
  double default_gap_tolerance = 0.0;
  bool warning = false;
  json extra = json::object();
};

AlgoOutput run_buntoprice(const ExperimentConfig& cfg, std::uint64_t seed) {
  const MarketInstance& m = cfg.market;
  AlgoOutput out;
  RepOracle oracle(m, seed);
  OracleProblem prob = OracleProblem::from_market(m, oracle);
  Bundle target(*cfg.params.target);
  BtpResult res = bun_to_price(prob, target, *cfg.params.epsilon, cfg.params.delta,
                               cfg.params.budget);
  out.query_count = oracle.query_count();
  out.warning = res.budget_warning;
  bool use_oracle = cfg.oracle_enabled();
  for (std::size_t l = 0; l < res.candidates.size(); ++l) {
    TraceRow row{l, res.candidate_means[l], res.candidates[l], out.query_count, std::nullopt};
    if (use_oracle)
      row.oracle_welfare = expected_welfare_price(m, PriceVector(res.candidates[l]));
    out.trace.push_back(std::move(row));
  }
  out.benchmark = *cfg.params.epsilon;
  double achieved = res.validation_distance;
  if (use_oracle)
    achieved = dist2(expected_demand(m, res.price).entries(), target.entries());
  out.achieved = achieved;
  out.gap = achieved;
  out.default_gap_tolerance = *cfg.params.epsilon;
  out.extra["price"] = res.price.entries();
  out.extra["validation_distance"] = res.validation_distance;
  return out;
}

AlgoOutput run_owel(const ExperimentConfig& cfg, std::uint64_t seed) {
  const MarketInstance& m = cfg.market;
  AlgoOutput out;
  RepOracle oracle(m, seed);
  OracleProblem prob = OracleProblem::from_market(m, oracle);
  OwelConfig ocfg = make_owel_config(cfg.params, cfg.params.alpha);
  OwelResult res = owel(prob, m.costs, m.supply, ocfg);
  out.query_count = oracle.query_count();
  out.warning = res.budget_warning;

  bool use_oracle = cfg.oracle_enabled();
  for (std::size_t t = 0; t < res.trace.iterates.size(); ++t) {
    const OwelIterate& it = res.trace.iterates[t];
    TraceRow row{t + 1, it.bundle, it.price, it.queries_cumulative, std::nullopt};
    if (use_oracle) row.oracle_welfare = expected_welfare_price(m, PriceVector(it.price));
    out.trace.push_back(std::move(row));
  }
  if (use_oracle) {
    out.benchmark = opt_lottery(m, m.supply);
    out.achieved = expected_welfare_price(m, res.price);
    out.gap = *out.benchmark - *out.achieved;
    Bundle demand = expected_demand(m, res.price);
    double viol = 0.0;
    for (std::size_t j = 0; j < m.dim(); ++j)
      viol = std::max(viol, demand[j] - m.supply[j]);
    out.supply_violation = viol;
  }
  out.default_gap_tolerance = cfg.params.alpha;
  out.extra["price"] = res.price.entries();
  out.extra["average_bundle"] = res.trace.average_bundle;
  out.extra["xi"] = res.resolved.xi;
  out.extra["eps"] = res.resolved.eps;
  out.extra["outer_iterations"] = res.resolved.outer_iterations;
  out.extra["outer_step"] = res.resolved.outer_step;
  return out;
}

AlgoOutput run_owel_ud(const ExperimentConfig& cfg, std::uint64_t seed) {
  const MarketInstance& m = cfg.market;
  AlgoOutput out;
  OwelConfig ocfg = make_owel_config(cfg.params, cfg.params.alpha);
  OwelUdResult res = owel_ud(m, cfg.params.alpha, cfg.params.delta, m.supply, ocfg, seed);
  out.query_count = res.inner.queries_used;
  out.warning = res.inner.budget_warning;

  bool use_oracle = cfg.oracle_enabled();
  for (std::size_t t = 0; t < res.inner.trace.iterates.size(); ++t) {
    const OwelIterate& it = res.inner.trace.iterates[t];
    TraceRow row{t + 1, it.bundle, it.price, it.queries_cumulative, std::nullopt};
    if (use_oracle) row.oracle_welfare = expected_welfare_price(m, PriceVector(it.price));
    out.trace.push_back(std::move(row));
  }
  if (use_oracle) {
    out.benchmark = opt_lottery(m, m.supply);
    Rng mc(seed);
    Rng mc_stream = mc.stream(0x6d635f6575ull);  // independent of the oracle streams
    DistributionEstimate est =
        distribution_demand_welfare(m, res.distribution, cfg.params.mc_samples, mc_stream);
    out.achieved = est.welfare;
    out.gap = *out.benchmark - *out.achieved;
    double viol = 0.0;
    for (std::size_t j = 0; j < m.dim(); ++j)
      viol = std::max(viol, est.demand[j] - m.supply[j]);
    out.supply_violation = viol;
    out.extra["welfare_stderr"] = est.welfare_stderr;
    out.extra["mc_demand"] = est.demand.entries();
  }
  out.default_gap_tolerance = cfg.params.alpha;
  out.extra["base_price"] = res.distribution.base.entries();
  out.extra["eta"] = res.eta;
  return out;
}

AlgoOutput run_limited_supply(const ExperimentConfig& cfg, std::uint64_t seed) {
  const MarketInstance& m = cfg.market;
  AlgoOutput out;
  PriceVector p_star = m.mode() == MarketMode::UnitDemand
                           ? PriceVector::unit_demand(*cfg.params.price)
                           : PriceVector(*cfg.params.price);
  Rng rng(seed);
  LimitedSupplyReport rep = verify_limited_supply_theorem(m, p_star, m.supply,
                                                          cfg.params.rounds, cfg.params.runs, rng);
  // Trace the first episode (stream 0 reproduces the one inside the report).
  Rng episode_rng = rng.stream(0);
  EpisodeTrace ep = run_episode(m, PricingPolicy::fixed_price(p_star), m.supply,
                                cfg.params.rounds, episode_rng);
  for (std::size_t t = 0; t < ep.rounds.size(); ++t) {
    out.trace.push_back(
        {t + 1, ep.rounds[t].purchase, ep.rounds[t].posted_price, t + 1, ep.rounds[t].welfare});
  }
  out.query_count = rep.total_rounds;  // simulated rounds; no ReP queries
  out.benchmark = rep.threshold;
  out.achieved = rep.mean_z;
  out.gap = rep.threshold - rep.mean_z;  // <= 0 passes
  out.default_gap_tolerance = 0.0;
  out.extra["mean_tau"] = rep.mean_tau;
  out.extra["deviation_bound"] = rep.bound;
  out.extra["per_round_welfare"] = rep.per_round_welfare;
  out.extra["stderr"] = rep.stderr_z;
  out.extra["concentration_fraction"] = rep.concentration_fraction;
  out.extra["halted_good"] = ep.halted_good ? json(*ep.halted_good) : json(nullptr);
  return out;
}

AlgoOutput run_structural(const ExperimentConfig& cfg, std::uint64_t seed) {
  const MarketInstance& m = cfg.market;
  AlgoOutput out;
  Rng rng(seed);
  StructuralReport rep = structural_checks(m, static_cast<int>(cfg.params.trials), rng);
  for (std::size_t i = 0; i < rep.violations.size(); ++i) {
    const StructuralViolation& v = rep.violations[i];
    out.trace.push_back({i, v.x, v.y, 0, v.lhs});
  }
  out.query_count = 0;
  out.benchmark = 0.0;
  out.achieved = static_cast<double>(rep.violations.size());
  out.gap = *out.achieved;
  out.default_gap_tolerance = 0.0;
  out.extra["trials"] = rep.trials;
  out.extra["concavity_checked"] = rep.concavity_checked;
  out.extra["holder_checked"] = rep.holder_checked;
  out.extra["supergradient_checked"] = rep.supergradient_checked;
  out.extra["saturation_checked"] = rep.saturation_checked;
  return out;
}

}  // namespace

RunRecord run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  auto t0 = std::chrono::steady_clock::now();
  std::uint64_t seed = options.seed_override.value_or(config.seed);
  std::string out_dir = options.out_override.value_or(config.output_dir);

  AlgoOutput algo;
  switch (config.algorithm) {
    case Algorithm::BunToPrice:
      algo = run_buntoprice(config, seed);
      break;
    case Algorithm::Owel:
      algo = run_owel(config, seed);
      break;
    case Algorithm::OwelUd:
      algo = run_owel_ud(config, seed);
      break;
    case Algorithm::LimitedSupply:
      algo = run_limited_supply(config, seed);
      break;
    case Algorithm::StructuralChecks:
      algo = run_structural(config, seed);
      break;
  }

  RunRecord rec;
  rec.seed = seed;
  rec.trace = std::move(algo.trace);
  rec.query_count = algo.query_count;
  rec.benchmark = algo.benchmark;
  rec.achieved = algo.achieved;
  rec.gap = algo.gap;
  rec.warning = algo.warning;
  rec.supply_violation = algo.supply_violation;
  rec.gap_tolerance = config.params.gap_tolerance.value_or(algo.default_gap_tolerance);
  rec.pass = !rec.gap || *rec.gap <= rec.gap_tolerance + 1e-12;
  rec.config_hash = fnv1a_hex(to_string(config.algorithm) + "#" + std::to_string(seed));

  std::size_t bundle_dim = 0, price_dim = 0;
  for (const TraceRow& r : rec.trace) {
    bundle_dim = std::max(bundle_dim, r.bundle.size());
    price_dim = std::max(price_dim, r.price.size());
  }
  auto t1 = std::chrono::steady_clock::now();
  rec.runtime_seconds = std::chrono::duration<double>(t1 - t0).count();

  json summary;
  summary["algorithm"] = to_string(config.algorithm);
  summary["seed"] = seed;
  summary["query_count"] = rec.query_count;
  summary["benchmark"] = rec.benchmark ? json(*rec.benchmark) : json(nullptr);
  summary["achieved"] = rec.achieved ? json(*rec.achieved) : json(nullptr);
  summary["gap"] = rec.gap ? json(*rec.gap) : json(nullptr);
  summary["gap_tolerance"] = rec.gap_tolerance;
  summary["pass"] = rec.pass;
  summary["warning"] = rec.warning;
  summary["supply_violation"] =
      rec.supply_violation ? json(*rec.supply_violation) : json(nullptr);
  summary["runtime_seconds"] = rec.runtime_seconds;
  summary["config_hash"] = rec.config_hash;
  summary["trace_rows"] = rec.trace.size();
  for (auto it = algo.extra.begin(); it != algo.extra.end(); ++it)
    summary[it.key()] = it.value();
  rec.summary_json = summary.dump(2) + "\n";

  std::filesystem::path dir(out_dir);
  rec.trace_path = (dir / "trace.csv").string();
  rec.summary_path = (dir / "summary.json").string();
  write_atomic(rec.trace_path, trace_to_csv(rec.trace, bundle_dim, price_dim));
  write_atomic(rec.summary_path, rec.summary_json);

  rec.exit_code = options.assert_gap && !rec.pass ? 2 : 0;
  return rec;
}

std::string describe_experiment(const ExperimentConfig& config) {
  const MarketInstance& m = config.market;
  AssumptionParams ap = m.assumption_params();
  std::ostringstream out;
  out << "algorithm = " << to_string(config.algorithm) << "\n";
  out << "seed = " << config.seed << "\n";
  out << "dimension = " << m.dim() << "\n";
  out << "mode = " << (m.mode() == MarketMode::UnitDemand ? "unit-demand" : "divisible") << "\n";
  out << "oracle = " << (config.oracle_enabled() ? "on" : "off") << "\n";
  out << "sigma = " << ap.sigma << "\nlambda = " << ap.lambda << "\nbeta = " << ap.beta << "\n";
  out << "R = " << m.feasible.norm_bound() << "\n";

  const ExperimentParams& ep = config.params;
  switch (config.algorithm) {
    case Algorithm::BunToPrice: {
      double eps = ep.epsilon.value_or(0.05);
      ResolvedBtpBudget b = resolve_btp_budget(ep.budget, m.dim(), ap, m.feasible.norm_bound(),
                                               eps, ep.delta);
      out << "epsilon = " << eps << "\ndelta = " << ep.delta << "\n";
      out << "price_ball_radius = " << b.radius << "\n";
      out << "restarts = " << b.restarts << "\ndescent_iterations = " << b.descent_iterations
          << "\nvalidation_samples = " << b.validation_samples << "\nstep = " << b.step << "\n";
      break;
    }
    case Algorithm::Owel:
    case Algorithm::OwelUd: {
      double alpha = ep.alpha;
      OracleProblem prob{nullptr, m.feasible, ap};
      CostVector costs = m.costs;
      if (config.algorithm == Algorithm::OwelUd) {
        double eta = alpha / (2.0 * std::log(static_cast<double>(m.dim())));
        out << "eta_regularization = " << eta << "\n";
        out << "inner_alpha = " << 0.5 * alpha << "\n";
        prob.params = {eta, std::sqrt(static_cast<double>(m.dim())) + m.vmax, 0.5};
        alpha *= 0.5;
      }
      OwelConfig ocfg = make_owel_config(ep, alpha);
      OwelResolved r = resolve_owel(prob, costs, m.supply, ocfg);
      out << "alpha = " << ep.alpha << "\ndelta = " << ep.delta << "\n";
      out << "xi = " << r.xi << "\n";
      if (r.xi_simplex > 0.0) out << "xi_simplex = " << r.xi_simplex << "\n";
      out << "eps = " << r.eps << "\nouter_iterations = " << r.outer_iterations
          << "\nouter_step = " << r.outer_step << "\ndelta_prime = " << r.delta_prime << "\n";
      out << "price_ball_radius = " << r.price_ball_radius << "\n";
      out << "shrink_loss = " << r.shrink_loss_value << "\n";
      ResolvedBtpBudget b = resolve_btp_budget(ep.budget, m.dim(), prob.params,
                                               m.feasible.norm_bound(), r.eps, r.delta_prime);
      out << "inner_restarts = " << b.restarts << "\ninner_descent_iterations = "
          << b.descent_iterations << "\ninner_validation_samples = " << b.validation_samples
          << "\ninner_step = " << b.step << "\n";
      break;
    }
    case Algorithm::LimitedSupply: {
      out << "rounds = " << ep.rounds << "\nruns = " << ep.runs << "\n";
      out << "s_min = " << m.supply.min_entry() << "\n";
      double log_t = std::log(static_cast<double>(ep.rounds));
      out << "c0 = " << std::sqrt(8.0 * log_t) << "\n";
      out << "deviation_bound = " << deviation_bound(ep.rounds, m.supply.min_entry()) << "\n";
      break;
    }
    case Algorithm::StructuralChecks:
      out << "trials = " << ep.trials << "\n";
      break;
  }
  return out.str();
}

}  // namespace dynpricer
