#pragma once

#include <optional>
#include <variant>

#include "dynpricer/unit_demand.hpp"

namespace dynpricer {

// Fixed-vector or fixed-distribution pricing policy for the finite-horizon
// episodes.
class PricingPolicy {
 public:
  static PricingPolicy fixed_price(PriceVector p) { return PricingPolicy(std::move(p)); }
  static PricingPolicy fixed_distribution(GumbelPriceDistribution d) {
    return PricingPolicy(std::move(d));
  }

  bool is_fixed_price() const { return std::holds_alternative<PriceVector>(v_); }
  const PriceVector& price() const { return std::get<PriceVector>(v_); }
  const GumbelPriceDistribution& distribution() const {
    return std::get<GumbelPriceDistribution>(v_);
  }

  PriceVector draw(Rng& rng) const;

 private:
  explicit PricingPolicy(PriceVector p) : v_(std::move(p)) {}
  explicit PricingPolicy(GumbelPriceDistribution d) : v_(std::move(d)) {}
  std::variant<PriceVector, GumbelPriceDistribution> v_;
};

struct EpisodeRound {
  Vec posted_price;
  Vec purchase;
  std::size_t buyer_type = 0;
  double welfare = 0.0;  // v(x) - <c,x>, known to the simulator only
};

// Full record of one episode. Realized welfare is the evaluation metric of
// the simulation, never feedback to a learner.
struct EpisodeTrace {
  std::size_t tau = 0;       // stopping round
  double total_welfare = 0;  // Z_tau
  std::optional<std::size_t> halted_good;
  Vec final_consumption;             // y_{j,tau}
  std::vector<EpisodeRound> rounds;  // cumulative consumption is derivable
  bool unit_clamp_binding = false;   // divisible purchase clamped at 1/round
};

// Simulate rounds t = 1..horizon with non-replenishable inventory
// horizon * s_j per good: draw a price per the policy, draw a buyer, record
// the purchase and its welfare, and halt the first time some good's
// remaining inventory goes negative (the overshooting purchase stands).
EpisodeTrace run_episode(const MarketInstance& m, const PricingPolicy& policy,
                         const SupplyVector& s, std::size_t horizon, Rng& rng);

struct WelfareEstimate {
  double mean_z = 0.0;
  std::optional<double> stderr_z;  // undefined for a single run
  double mean_tau = 0.0;
  std::size_t runs = 0;
};

WelfareEstimate total_welfare_estimate(const MarketInstance& m, const PricingPolicy& policy,
                                       const SupplyVector& s, std::size_t horizon,
                                       std::size_t runs, Rng& rng);

// Explicit deviation constant assembled from the concentration argument:
// (1 + 2 c0) sqrt(T ln(T) / s_min) with c0 = sqrt(8 ln T).
// Requires T * s_min > 32 ln T.
double deviation_bound(std::size_t horizon, double s_min);

struct LimitedSupplyReport {
  double mean_z = 0.0;
  double stderr_z = 0.0;
  double per_round_welfare = 0.0;  // SW(p*)
  double bound = 0.0;              // deviation_bound
  double threshold = 0.0;          // T SW(p*) - bound - 3 stderr
  double margin = 0.0;             // mean_z - threshold
  bool pass = false;
  // fraction of episodes where |y_{j,t} - t x_j| <= c0 sqrt(t x_j) held for
  // every good at the sampled checkpoints t in {T/4, T/2, T}
  double concentration_fraction = 0.0;
  double mean_tau = 0.0;
  std::uint64_t total_rounds = 0;
  std::size_t runs = 0;
};

// Checks mean realized total welfare over `runs` fixed-price episodes
// against T * SW(p_star) - deviation_bound - 3 stderr, plus the per-good
// concentration sanity bound.
LimitedSupplyReport verify_limited_supply_theorem(const MarketInstance& m,
                                                  const PriceVector& p_star,
                                                  const SupplyVector& s, std::size_t horizon,
                                                  std::size_t runs, Rng& rng);

}  // namespace dynpricer
