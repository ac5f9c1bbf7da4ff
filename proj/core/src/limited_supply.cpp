#include "dynpricer/limited_supply.hpp"

#include <algorithm>
#include <cmath>

#include "dynpricer/market_ground_truth.hpp"

namespace dynpricer {

PriceVector PricingPolicy::draw(Rng& rng) const {
  if (is_fixed_price()) return price();
  const auto& d = distribution();
  return sample_perturbed_price(d.base, d.eta, rng);
}

EpisodeTrace run_episode(const MarketInstance& m, const PricingPolicy& policy,
                         const SupplyVector& s, std::size_t horizon, Rng& rng) {
  if (horizon < 1) throw_invalid("run_episode: horizon must be >= 1");
  if (s.dim() != m.dim()) throw_invalid("run_episode: supply dimension mismatch");
  const std::size_t d = m.dim();

  Vec budget(d);
  for (std::size_t j = 0; j < d; ++j) budget[j] = s[j] * static_cast<double>(horizon);

  EpisodeTrace trace;
  trace.rounds.reserve(horizon);
  Vec consumed(d, 0.0);

  for (std::size_t t = 1; t <= horizon; ++t) {
    Rng round_rng = rng.stream(t);
    PriceVector p = policy.draw(round_rng);
    std::size_t type = m.distribution.sample(round_rng);
    Bundle x = m.type_response(type, p);

    Vec purchase = x.entries();
    // At most one unit of each good sells per round; must not bind for the
    // instances this simulator is configured with.
    for (double& q : purchase) {
      if (q > 1.0) {
        q = 1.0;
        trace.unit_clamp_binding = true;
      }
    }
    double welfare = m.distribution.type(type).value(Bundle(purchase)) -
                     dot(m.costs.entries(), purchase);

    axpy(consumed, 1.0, purchase);
    trace.total_welfare += welfare;
    trace.rounds.push_back({p.entries(), purchase, type, welfare});
    trace.tau = t;

    for (std::size_t j = 0; j < d; ++j) {
      if (consumed[j] > budget[j]) {
        trace.halted_good = j;
        break;
      }
    }
    if (trace.halted_good) break;
  }
  trace.final_consumption = std::move(consumed);
  return trace;
}

WelfareEstimate total_welfare_estimate(const MarketInstance& m, const PricingPolicy& policy,
                                       const SupplyVector& s, std::size_t horizon,
                                       std::size_t runs, Rng& rng) {
  if (runs < 1) throw_invalid("total_welfare_estimate: runs must be >= 1");
  double z_sum = 0.0, z_sq = 0.0, tau_sum = 0.0;
  for (std::size_t r = 0; r < runs; ++r) {
    Rng episode_rng = rng.stream(r);
    EpisodeTrace trace = run_episode(m, policy, s, horizon, episode_rng);
    z_sum += trace.total_welfare;
    z_sq += trace.total_welfare * trace.total_welfare;
    tau_sum += static_cast<double>(trace.tau);
  }
  const double n = static_cast<double>(runs);
  WelfareEstimate est;
  est.runs = runs;
  est.mean_z = z_sum / n;
  est.mean_tau = tau_sum / n;
  if (runs > 1) {
    double var = std::max(0.0, (z_sq - n * est.mean_z * est.mean_z) / (n - 1.0));
    est.stderr_z = std::sqrt(var / n);
  }
  return est;
}

double deviation_bound(std::size_t horizon, double s_min) {
  if (!(s_min > 0.0)) throw_invalid("deviation_bound: s_min must be positive");
  const double t = static_cast<double>(horizon);
  const double log_t = std::log(t);
  if (!(t * s_min > 32.0 * log_t))
    throw_invalid("deviation_bound: requires T * s_min > 32 * ln(T)");
  const double c0 = std::sqrt(8.0 * log_t);
  return (1.0 + 2.0 * c0) * std::sqrt(t * log_t / s_min);
}

LimitedSupplyReport verify_limited_supply_theorem(const MarketInstance& m,
                                                  const PriceVector& p_star,
                                                  const SupplyVector& s, std::size_t horizon,
                                                  std::size_t runs, Rng& rng) {
  Bundle x_star = expected_demand(m, p_star);
  for (std::size_t j = 0; j < m.dim(); ++j)
    if (x_star[j] > s[j] + 1e-9)
      throw_invalid("verify_limited_supply_theorem: expected demand exceeds supply");

  LimitedSupplyReport rep;
  rep.runs = runs;
  rep.per_round_welfare = expected_welfare_price(m, p_star);
  rep.bound = deviation_bound(horizon, s.min_entry());

  const double t_total = static_cast<double>(horizon);
  const double c0 = std::sqrt(8.0 * std::log(t_total));
  const std::size_t checkpoints[3] = {horizon / 4, horizon / 2, horizon};

  PricingPolicy policy = PricingPolicy::fixed_price(p_star);
  double z_sum = 0.0, z_sq = 0.0, tau_sum = 0.0;
  std::size_t concentrated = 0;
  for (std::size_t r = 0; r < runs; ++r) {
    Rng episode_rng = rng.stream(r);
    EpisodeTrace trace = run_episode(m, policy, s, horizon, episode_rng);
    z_sum += trace.total_welfare;
    z_sq += trace.total_welfare * trace.total_welfare;
    tau_sum += static_cast<double>(trace.tau);
    rep.total_rounds += trace.tau;

    Vec cum(m.dim(), 0.0);
    bool ok = true;
    std::size_t next_cp = 0;
    for (std::size_t t = 1; t <= trace.tau && next_cp < 3; ++t) {
      axpy(cum, 1.0, trace.rounds[t - 1].purchase);
      while (next_cp < 3 && checkpoints[next_cp] == t) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
          double expected = static_cast<double>(t) * x_star[j];
          if (std::fabs(cum[j] - expected) > c0 * std::sqrt(expected)) ok = false;
        }
        ++next_cp;
      }
    }
    if (ok) ++concentrated;
  }
  const double n = static_cast<double>(runs);
  rep.mean_z = z_sum / n;
  rep.mean_tau = tau_sum / n;
  if (runs > 1) {
    double var = std::max(0.0, (z_sq - n * rep.mean_z * rep.mean_z) / (n - 1.0));
    rep.stderr_z = std::sqrt(var / n);
  }
  rep.threshold = t_total * rep.per_round_welfare - rep.bound - 3.0 * rep.stderr_z;
  rep.margin = rep.mean_z - rep.threshold;
  rep.pass = rep.margin >= 0.0;
  rep.concentration_fraction = static_cast<double>(concentrated) / n;
  return rep;
}

}  // namespace dynpricer
