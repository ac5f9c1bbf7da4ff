#include "dynpricer/market.hpp"

#include <algorithm>
#include <cmath>

namespace dynpricer {

BuyerDistribution::BuyerDistribution(std::vector<Valuation> types, Vec weights)
    : types_(std::move(types)), weights_(std::move(weights)) {
  if (types_.empty()) throw_invalid("BuyerDistribution: no types");
  if (types_.size() != weights_.size()) throw_invalid("BuyerDistribution: weights size mismatch");
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0)) throw_invalid("BuyerDistribution: weights must be positive");
    sum += w;
  }
  if (std::fabs(sum - 1.0) > 1e-12) throw_invalid("BuyerDistribution: weights must sum to 1");
  const std::size_t d = types_.front().dim();
  const bool ud = types_.front().is_unit_demand();
  for (const auto& t : types_) {
    if (t.dim() != d) throw_invalid("BuyerDistribution: types must share dimension");
    if (t.is_unit_demand() != ud) throw_invalid("BuyerDistribution: types must share mode");
  }
  cumulative_.resize(weights_.size());
  double c = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    c += weights_[i];
    cumulative_[i] = c;
  }
  cumulative_.back() = 1.0;
}

MarketMode BuyerDistribution::mode() const {
  return types_.front().is_unit_demand() ? MarketMode::UnitDemand : MarketMode::Divisible;
}

std::size_t BuyerDistribution::sample(Rng& rng) const {
  double u = rng.uniform01();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) return cumulative_.size() - 1;
  return static_cast<std::size_t>(it - cumulative_.begin());
}

MarketInstance::MarketInstance(BuyerDistribution distribution_, CostVector costs_,
                               SupplyVector supply_, FeasibleSet feasible_, double vmax_)
    : distribution(std::move(distribution_)),
      costs(std::move(costs_)),
      supply(std::move(supply_)),
      feasible(std::move(feasible_)),
      vmax(vmax_) {
  const std::size_t d = distribution.dim();
  if (costs.dim() != d || supply.dim() != d || feasible.dim() != d)
    throw_invalid("MarketInstance: dimension mismatch");
  if (!(vmax > 0.0)) throw_invalid("MarketInstance: vmax must be positive");
  if (mode() == MarketMode::UnitDemand) {
    if (feasible.kind() != FeasibleSet::Kind::Simplex)
      throw_invalid("MarketInstance: unit-demand mode requires the simplex feasible set");
    if (costs[d - 1] != 0.0) throw_invalid("MarketInstance: dummy good cost must be 0");
    if (std::fabs(supply[d - 1] - 1.0) > 1e-12)
      throw_invalid("MarketInstance: dummy good supply must be 1");
    for (std::size_t i = 0; i < distribution.num_types(); ++i) {
      const auto* ud = distribution.type(i).as_unit_demand();
      for (std::size_t j = 0; j + 1 < d; ++j)
        if (ud->values[j] > vmax) throw_invalid("MarketInstance: vmax must bound all values");
    }
  }
}

AssumptionParams MarketInstance::assumption_params() const {
  double sigma = std::numeric_limits<double>::infinity();
  double beta = 1.0;
  for (std::size_t i = 0; i < distribution.num_types(); ++i) {
    sigma = std::min(sigma, distribution.type(i).sigma());
    beta = std::min(beta, distribution.type(i).beta());
  }
  double diam1 = 0.0;
  if (feasible.kind() == FeasibleSet::Kind::Box) {
    for (std::size_t j = 0; j < feasible.dim(); ++j)
      diam1 += feasible.upper()[j] - feasible.lower()[j];
  } else {
    diam1 = 2.0;
  }
  double lambda = 1.0;
  for (std::size_t i = 0; i < distribution.num_types(); ++i) {
    const Valuation& t = distribution.type(i);
    lambda = std::max(lambda,
                      t.lambda() * std::pow(std::max(1.0, diam1), t.beta() - beta));
  }
  return {sigma, lambda, beta};
}

Bundle MarketInstance::type_response(std::size_t type_index, const PriceVector& p) const {
  const Valuation& t = distribution.type(type_index);
  if (mode() == MarketMode::UnitDemand)
    return Bundle::one_hot(dim(), unit_demand_choice(*t.as_unit_demand(), p));
  return t.best_response(p, feasible);
}

Bundle rep_query(const MarketInstance& m, const PriceVector& p, Rng& rng) {
  return m.type_response(m.distribution.sample(rng), p);
}

Bundle RepOracle::query(const PriceVector& p) {
  Rng rng = Rng(stats_.seed).stream(stats_.query_count);
  ++stats_.query_count;
  return rep_query(*m_, p, rng);
}

}  // namespace dynpricer
