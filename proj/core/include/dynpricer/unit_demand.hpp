#pragma once

#include "dynpricer/owel.hpp"

namespace dynpricer {

// Law of the randomized posted prices: draw p' = Convert(base - eta * G)
// with i.i.d. standard Gumbel coordinates G. Expected unit-demand choice
// frequencies under p' equal the softmax response softmax((v - base)/eta).
struct GumbelPriceDistribution {
  GumbelPriceDistribution(PriceVector base_, double eta_);
  PriceVector base;  // length d+1, dummy priced 0
  double eta;        // temperature / regularization
};

// Shift-and-clamp nonnegativization: p'_{d+1} = 0 and
// p'_j = (p_j - p_{d+1}) - min{0, min_{j' in [d]} (p_{j'} - p_{d+1})}.
// Accepts any real vector; preserves every buyer's argmax when the original
// argmax is unique.
PriceVector convert(const Vec& raw);

// One draw from D(p): subtract eta times a standard Gumbel variate per
// coordinate (all d+1 of them), then Convert. Requires p_{d+1} = 0.
PriceVector sample_perturbed_price(const PriceVector& p, double eta, Rng& rng);

// Simulate the response of a regularized buyer: one ReP query at a freshly
// sampled perturbed price. Unbiased for the regularized mixture demand
// sum_i psi_i softmax((v_i - p)/eta).
Bundle sim(const MarketInstance& m, const PriceVector& p, double eta, Rng& rng);

// Exact regularized mixture demand at a raw (possibly unshifted) price.
Vec regularized_mixture_demand(const MarketInstance& m, const Vec& raw_price, double eta);

// Demand oracle adapter feeding OWel's inner layer with Sim draws. Query k
// derives its Gumbel noise and its buyer from stream(seed, k). Prices from
// the restricted ball may carry a nonzero dummy coordinate; the sampling
// law only depends on price differences, so queries are shifted by the
// dummy entry before perturbing.
class SimOracle final : public DemandOracle {
 public:
  SimOracle(const MarketInstance& m, double eta, std::uint64_t seed)
      : m_(&m), eta_(eta), seed_(seed) {}

  Bundle query(const PriceVector& p) override;
  std::uint64_t query_count() const override { return count_; }

 private:
  const MarketInstance* m_;
  double eta_;
  std::uint64_t seed_;
  std::uint64_t count_ = 0;
};

// Deterministic stand-in for SimOracle that returns the exact regularized
// mixture demand instead of a one-hot sample; used to isolate optimization
// error from sampling error in tests.
class RegularizedDemandOracle final : public DemandOracle {
 public:
  RegularizedDemandOracle(const MarketInstance& m, double eta) : m_(&m), eta_(eta) {}
  Bundle query(const PriceVector& p) override;
  std::uint64_t query_count() const override { return count_; }

 private:
  const MarketInstance* m_;
  double eta_;
  std::uint64_t count_ = 0;
};

struct OwelUdResult {
  GumbelPriceDistribution distribution;
  PriceVector raw_price;  // OWel's output before normalization
  OwelResult inner;
  double eta = 0.0;
};

// Unit-demand pipeline: run OWel with accuracy alpha/2 on the
// eta-regularized problem (eta = alpha / (2 ln(d+1))), serving every inner
// oracle call through Sim, and wrap the resulting price vector into a
// Gumbel price distribution.
OwelUdResult owel_ud(const MarketInstance& m, double alpha, double delta,
                     const SupplyVector& supply, const OwelConfig& cfg, std::uint64_t seed);

// Solves the eta-regularized stochastic program for the given target on the
// simplex (dual coordinate bisection sweeps) and verifies every expected-
// demand constraint is saturated within tol.
bool regularized_scp_saturation_check(const MarketInstance& m, const Vec& target, double eta,
                                      double tol = 1e-6);

}  // namespace dynpricer
