#include "dynpricer/market_ground_truth.hpp"

#include <cmath>

#include "dynpricer/unit_demand.hpp"

namespace dynpricer {

Bundle expected_demand(const MarketInstance& m, const PriceVector& p) {
  Vec demand(m.dim(), 0.0);
  for (std::size_t i = 0; i < m.distribution.num_types(); ++i)
    axpy(demand, m.distribution.weight(i), m.type_response(i, p).entries());
  return Bundle(std::move(demand));
}

double expected_welfare_price(const MarketInstance& m, const PriceVector& p) {
  double welfare = 0.0;
  for (std::size_t i = 0; i < m.distribution.num_types(); ++i) {
    Bundle x = m.type_response(i, p);
    welfare += m.distribution.weight(i) *
               (m.distribution.type(i).value(x) - dot(m.costs.entries(), x.entries()));
  }
  return welfare;
}

DistributionEstimate distribution_demand_welfare(const MarketInstance& m,
                                                 const GumbelPriceDistribution& dist,
                                                 std::size_t samples, Rng& rng) {
  if (samples < 1) throw_invalid("distribution_demand_welfare: samples must be >= 1");
  const std::size_t d = m.dim();
  Vec demand_sum(d, 0.0), demand_sq(d, 0.0);
  double w_sum = 0.0, w_sq = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    Rng draw = rng.stream(k);
    PriceVector p = sample_perturbed_price(dist.base, dist.eta, draw);
    Bundle x = expected_demand(m, p);
    double w = expected_welfare_price(m, p);
    for (std::size_t j = 0; j < d; ++j) {
      demand_sum[j] += x[j];
      demand_sq[j] += x[j] * x[j];
    }
    w_sum += w;
    w_sq += w * w;
  }
  const double n = static_cast<double>(samples);
  DistributionEstimate est{.demand = Bundle(scale(demand_sum, 1.0 / n))};
  est.samples = samples;
  est.welfare = w_sum / n;
  est.demand_stderr.assign(d, 0.0);
  if (samples > 1) {
    for (std::size_t j = 0; j < d; ++j) {
      double var = std::max(0.0, (demand_sq[j] - n * est.demand[j] * est.demand[j]) / (n - 1.0));
      est.demand_stderr[j] = std::sqrt(var / n);
    }
    double var = std::max(0.0, (w_sq - n * est.welfare * est.welfare) / (n - 1.0));
    est.welfare_stderr = std::sqrt(var / n);
  }
  return est;
}

}  // namespace dynpricer
