#pragma once

// Exact mixture oracles over a MarketInstance. These see the true buyer
// distribution and the true welfare, which the model keeps hidden from the
// learning algorithms: they exist for tests, benchmarks and acceptance
// checks only. Learning code must consume DemandOracle instead; keeping
// these in a separate header is the guard rail.

#include <optional>

#include "dynpricer/market.hpp"

namespace dynpricer {

// x*_psi(p): probability-weighted sum of per-type responses.
Bundle expected_demand(const MarketInstance& m, const PriceVector& p);

// SW(p) = sum_i psi_i [v_i(x_i) - <c, x_i>] at the per-type responses.
double expected_welfare_price(const MarketInstance& m, const PriceVector& p);

struct DistributionEstimate {
  Bundle demand;
  Vec demand_stderr;
  double welfare = 0.0;
  double welfare_stderr = 0.0;
  std::size_t samples = 0;
};

struct GumbelPriceDistribution;

// Monte-Carlo estimates of x(D) and SW(D) for a Gumbel price distribution,
// using the exact oracles above on every sampled price. Sample k draws its
// perturbation from rng.stream(k).
DistributionEstimate distribution_demand_welfare(const MarketInstance& m,
                                                 const GumbelPriceDistribution& dist,
                                                 std::size_t samples, Rng& rng);

}  // namespace dynpricer
