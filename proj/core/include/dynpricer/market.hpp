#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "dynpricer/core_types.hpp"
#include "dynpricer/rng.hpp"
#include "dynpricer/valuations.hpp"

namespace dynpricer {

enum class MarketMode { Divisible, UnitDemand };

// Finite mixture psi over buyer types. Weights are positive and sum to 1;
// all types share dimension and mode.
class BuyerDistribution {
 public:
  BuyerDistribution(std::vector<Valuation> types, Vec weights);

  std::size_t num_types() const { return types_.size(); }
  const Valuation& type(std::size_t i) const { return types_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }
  std::size_t dim() const { return types_.front().dim(); }
  MarketMode mode() const;

  std::size_t sample(Rng& rng) const;

 private:
  std::vector<Valuation> types_;
  Vec weights_;
  Vec cumulative_;
};

// Assumption constants aggregated over a mixture: sigma = min over types,
// beta = min over types, lambda adjusted so the Hoelder bound holds at the
// common beta over the whole feasible set.
struct AssumptionParams {
  double sigma;
  double lambda;
  double beta;
};

struct MarketInstance {
  MarketInstance(BuyerDistribution distribution, CostVector costs, SupplyVector supply,
                 FeasibleSet feasible, double vmax);

  BuyerDistribution distribution;
  CostVector costs;
  SupplyVector supply;
  FeasibleSet feasible;
  double vmax;

  MarketMode mode() const { return distribution.mode(); }
  std::size_t dim() const { return distribution.dim(); }
  AssumptionParams assumption_params() const;

  // Purchase of a specific type at prices p (one-hot in unit-demand mode).
  Bundle type_response(std::size_t type_index, const PriceVector& p) const;
};

// Interface the learning layers see: post a price, observe one purchase.
class DemandOracle {
 public:
  virtual ~DemandOracle() = default;
  virtual Bundle query(const PriceVector& p) = 0;
  virtual std::uint64_t query_count() const = 0;
};

struct OracleStats {
  std::uint64_t query_count = 0;
  std::uint64_t seed = 0;
};

// The simulated revealed-preference oracle: each query draws a buyer type
// from psi and returns only the purchased bundle. Query k derives its
// randomness from stream(seed, k), so the sequence is reproducible and
// independent of batching.
class RepOracle final : public DemandOracle {
 public:
  RepOracle(const MarketInstance& m, std::uint64_t seed) : m_(&m), stats_{0, seed} {}

  Bundle query(const PriceVector& p) override;
  std::uint64_t query_count() const override { return stats_.query_count; }
  const OracleStats& stats() const { return stats_; }

 private:
  const MarketInstance* m_;
  OracleStats stats_;
};

// One draw of the revealed-preference oracle with caller-held randomness.
Bundle rep_query(const MarketInstance& m, const PriceVector& p, Rng& rng);

}  // namespace dynpricer
