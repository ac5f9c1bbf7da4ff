#pragma once

#include <cstdint>
#include <vector>

#include "dynpricer/market.hpp"
#include "dynpricer/sgd.hpp"

namespace dynpricer {

// Radius of the restricted price search space P(eps):
// sqrt(d) * lambda^(1/beta) * (4d / (eps^2 sigma))^((1-beta)/beta).
double price_radius(std::size_t d, double lambda, double beta, double sigma, double eps);

// Unbiased estimate of the dual gradient at the queried price:
// target - purchased.
Vec dual_gradient_estimate(const Bundle& target, const Bundle& purchased);

// What the learning layers know about an instance: a demand oracle plus the
// assumption constants. Ground-truth oracles are deliberately absent.
struct OracleProblem {
  DemandOracle* oracle;
  FeasibleSet feasible;
  AssumptionParams params;

  static OracleProblem from_market(const MarketInstance& m, DemandOracle& oracle) {
    return {&oracle, m.feasible, m.assumption_params()};
  }
};

// Inner-layer budget. Zero/absent fields resolve to the theory schedule
// scaled by `scale`; the theory constants are proof-driven and far beyond
// desk scale, so experiment configs normally pin these explicitly.
struct BtpBudget {
  std::size_t restarts = 0;            // T0; 0 -> ceil(log2(2/delta))
  std::size_t descent_iterations = 0;  // T1; 0 -> scale * t1_constant * d L^2 R^2 / (eps^4 sigma^2)
  std::size_t validation_samples = 0;  // T2; 0 -> scale * 4 R^2 ln(16 d R^2/delta) / eps^2
  double step = 0.0;                   // eta; 0 -> R / (L sqrt(d T1))
  double scale = 1e-3;
  double t1_constant = 16384.0;  // the T1 schedule constant, kept configurable
  std::uint64_t max_queries = 0;  // 0 = unlimited
};

struct ResolvedBtpBudget {
  std::size_t restarts = 0, descent_iterations = 0, validation_samples = 0;
  double step = 0.0;
  double radius = 0.0;  // price ball
  double smooth_l = 0.0;
};

ResolvedBtpBudget resolve_btp_budget(const BtpBudget& budget, std::size_t d,
                                     const AssumptionParams& params, double norm_bound,
                                     double eps, double delta);

struct BtpResult {
  PriceVector price;
  Vec empirical_mean;          // validation average at the selected price
  double validation_distance;  // ||empirical_mean - target||_2
  bool budget_warning = false;
  std::uint64_t queries_used = 0;
  std::vector<Vec> candidates;
  std::vector<Vec> candidate_means;
  std::vector<double> candidate_distances;
};

// Learn a price approximately inducing the target expected bundle:
// T0 independent dual-descent runs over the price ball (averaged iterates
// kept as candidates), T2 validation queries per candidate, then pick the
// candidate whose empirical mean bundle is l2-closest to the target.
// Requires a strictly positive target inside the feasible set.
BtpResult bun_to_price(const OracleProblem& prob, const Bundle& target, double eps, double delta,
                       const BtpBudget& budget);

}  // namespace dynpricer
