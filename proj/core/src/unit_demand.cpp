#include "dynpricer/unit_demand.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dynpricer {

GumbelPriceDistribution::GumbelPriceDistribution(PriceVector base_, double eta_)
    : base(std::move(base_)), eta(eta_) {
  if (base.entries().back() != 0.0)
    throw_invalid("GumbelPriceDistribution: dummy good must be priced 0");
  if (!(eta > 0.0)) throw_invalid("GumbelPriceDistribution: eta must be positive");
}

PriceVector convert(const Vec& raw) {
  if (raw.size() < 2) throw_invalid("convert: needs d+1 entries");
  const std::size_t k = raw.size();
  const double shift = raw[k - 1];
  double min_rel = 0.0;
  for (std::size_t j = 0; j + 1 < k; ++j) min_rel = std::min(min_rel, raw[j] - shift);
  Vec out(k, 0.0);
  for (std::size_t j = 0; j + 1 < k; ++j) out[j] = (raw[j] - shift) - min_rel;
  return PriceVector(std::move(out));
}

namespace {

PriceVector perturb_raw(const Vec& raw, double eta, Rng& rng) {
  Vec noisy(raw.size());
  for (std::size_t j = 0; j < raw.size(); ++j) noisy[j] = raw[j] - eta * rng.gumbel();
  return convert(noisy);
}

}  // namespace

PriceVector sample_perturbed_price(const PriceVector& p, double eta, Rng& rng) {
  if (!(eta > 0.0)) throw_invalid("sample_perturbed_price: eta must be positive");
  if (p.entries().back() != 0.0)
    throw_invalid("sample_perturbed_price: dummy good must be priced 0");
  return perturb_raw(p.entries(), eta, rng);
}

Bundle sim(const MarketInstance& m, const PriceVector& p, double eta, Rng& rng) {
  if (m.mode() != MarketMode::UnitDemand) throw_invalid("sim: unit-demand markets only");
  PriceVector posted = sample_perturbed_price(p, eta, rng);
  return rep_query(m, posted, rng);
}

Vec regularized_mixture_demand(const MarketInstance& m, const Vec& raw_price, double eta) {
  if (m.mode() != MarketMode::UnitDemand)
    throw_invalid("regularized_mixture_demand: unit-demand markets only");
  Vec demand(m.dim(), 0.0);
  for (std::size_t i = 0; i < m.distribution.num_types(); ++i) {
    Vec r = regularized_response(m.distribution.type(i).as_unit_demand()->values, raw_price, eta);
    axpy(demand, m.distribution.weight(i), r);
  }
  return demand;
}

Bundle SimOracle::query(const PriceVector& p) {
  Rng rng = Rng(seed_).stream(count_);
  ++count_;
  // The choice law depends only on price differences; shift so the dummy
  // sits at zero before adding noise.
  Vec raw = p.entries();
  double shift = raw.back();
  for (double& v : raw) v -= shift;
  PriceVector posted = perturb_raw(raw, eta_, rng);
  return rep_query(*m_, posted, rng);
}

Bundle RegularizedDemandOracle::query(const PriceVector& p) {
  ++count_;
  return Bundle(regularized_mixture_demand(*m_, p.entries(), eta_));
}

OwelUdResult owel_ud(const MarketInstance& m, double alpha, double delta,
                     const SupplyVector& supply, const OwelConfig& cfg, std::uint64_t seed) {
  if (m.mode() != MarketMode::UnitDemand) throw_invalid("owel_ud: unit-demand markets only");
  if (supply.dim() != m.dim()) throw_invalid("owel_ud: supply dimension mismatch");
  if (std::fabs(supply[m.dim() - 1] - 1.0) > 1e-12)
    throw_invalid("owel_ud: dummy good supply must be 1");
  if (!(alpha > 0.0)) throw_invalid("owel_ud: alpha must be positive");

  const std::size_t k = m.dim();  // d + 1
  const double eta = alpha / (2.0 * std::log(static_cast<double>(k)));
  const double owel_alpha = 0.5 * alpha;

  SimOracle oracle(m, eta, seed);
  OracleProblem prob;
  prob.oracle = &oracle;
  prob.feasible = m.feasible;
  // The eta-regularized valuations are eta-strongly concave and
  // (sqrt(d+1) + Vmax, 1/2)-Hoelder continuous.
  prob.params = {eta, std::sqrt(static_cast<double>(k)) + m.vmax, 0.5};

  OwelConfig inner_cfg = cfg;
  inner_cfg.alpha = owel_alpha;
  inner_cfg.delta = delta;

  OwelResult inner = owel(prob, m.costs, supply, inner_cfg);
  PriceVector raw = inner.price;
  GumbelPriceDistribution dist(convert(raw.entries()), eta);
  return OwelUdResult{std::move(dist), std::move(raw), std::move(inner), eta};
}

bool regularized_scp_saturation_check(const MarketInstance& m, const Vec& target, double eta,
                                      double tol) {
  if (m.mode() != MarketMode::UnitDemand)
    throw_invalid("regularized_scp_saturation_check: unit-demand markets only");
  if (!(eta > 0.0)) throw_invalid("regularized_scp_saturation_check: eta must be positive");
  if (!m.feasible.contains(target, 1e-9))
    throw_invalid("regularized_scp_saturation_check: target must lie on the simplex");

  const std::size_t k = m.dim();
  const double cap = m.vmax + 50.0 * eta;
  Vec p(k, 0.0);

  auto coord_demand = [&](std::size_t j) {
    return regularized_mixture_demand(m, p, eta)[j];
  };

  // Nonlinear Gauss-Seidel on the dual: demand_j is decreasing in p_j with
  // the other coordinates held fixed, so each sweep bisects every
  // coordinate to its target share (or clamps at 0 / cap).
  double residual = std::numeric_limits<double>::infinity();
  for (int sweep = 0; sweep < 4000 && residual > tol; ++sweep) {
    for (std::size_t j = 0; j < k; ++j) {
      double lo = 0.0, hi = cap;
      p[j] = lo;
      if (coord_demand(j) <= target[j]) continue;  // free good already clears
      p[j] = hi;
      if (coord_demand(j) >= target[j]) continue;  // cap still undersupplies
      for (int it = 0; it < 100; ++it) {
        p[j] = 0.5 * (lo + hi);
        if (coord_demand(j) > target[j])
          lo = p[j];
        else
          hi = p[j];
      }
    }
    residual = norm_inf(sub(regularized_mixture_demand(m, p, eta), target));
  }
  // The regularized program saturates whenever the duals can be computed at
  // all, so a stall is a solver failure rather than a negative verdict.
  if (residual > tol)
    throw SolverFailure(residual,
                        "regularized_scp_saturation_check: dual sweeps stalled at residual " +
                            std::to_string(residual));
  return true;
}

}  // namespace dynpricer
