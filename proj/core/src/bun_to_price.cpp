#include "dynpricer/bun_to_price.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dynpricer {

double price_radius(std::size_t d, double lambda, double beta, double sigma, double eps) {
  if (d == 0) throw_invalid("price_radius: d must be positive");
  if (!(lambda >= 1.0)) throw_invalid("price_radius: lambda must be >= 1");
  if (!(beta > 0.0) || !(beta <= 1.0)) throw_invalid("price_radius: beta must lie in (0,1]");
  if (!(sigma > 0.0)) throw_invalid("price_radius: sigma must be positive");
  if (!(eps > 0.0)) throw_invalid("price_radius: eps must be positive");
  double l = std::pow(lambda, 1.0 / beta) *
             std::pow(4.0 * static_cast<double>(d) / (eps * eps * sigma), (1.0 - beta) / beta);
  return std::sqrt(static_cast<double>(d)) * l;
}

Vec dual_gradient_estimate(const Bundle& target, const Bundle& purchased) {
  return sub(target.entries(), purchased.entries());
}

ResolvedBtpBudget resolve_btp_budget(const BtpBudget& budget, std::size_t d,
                                     const AssumptionParams& params, double norm_bound,
                                     double eps, double delta) {
  if (!(delta > 0.0) || !(delta < 1.0)) throw_invalid("bun_to_price: delta must lie in (0,1)");
  ResolvedBtpBudget r;
  const double dd = static_cast<double>(d);
  r.smooth_l = std::pow(params.lambda, 1.0 / params.beta) *
               std::pow(4.0 * dd / (eps * eps * params.sigma), (1.0 - params.beta) / params.beta);
  r.radius = std::sqrt(dd) * r.smooth_l;

  r.restarts = budget.restarts > 0
                   ? budget.restarts
                   : static_cast<std::size_t>(std::max(1.0, std::ceil(std::log2(2.0 / delta))));
  if (budget.descent_iterations > 0) {
    r.descent_iterations = budget.descent_iterations;
  } else {
    double t1 = budget.scale * budget.t1_constant * dd * r.smooth_l * r.smooth_l * norm_bound *
                norm_bound / (std::pow(eps, 4.0) * params.sigma * params.sigma);
    r.descent_iterations = static_cast<std::size_t>(std::clamp(t1, 1.0, 1e18));
  }
  if (budget.validation_samples > 0) {
    r.validation_samples = budget.validation_samples;
  } else {
    double arg = std::max(2.0, 16.0 * dd * norm_bound * norm_bound / delta);
    double t2 = budget.scale * 4.0 * norm_bound * norm_bound * std::log(arg) / (eps * eps);
    r.validation_samples = static_cast<std::size_t>(std::clamp(t2, 1.0, 1e18));
  }
  r.step = budget.step > 0.0
               ? budget.step
               : norm_bound / (r.smooth_l *
                               std::sqrt(dd * static_cast<double>(r.descent_iterations)));
  return r;
}

BtpResult bun_to_price(const OracleProblem& prob, const Bundle& target, double eps, double delta,
                       const BtpBudget& budget) {
  const std::size_t d = prob.feasible.dim();
  if (target.dim() != d) throw_invalid("bun_to_price: dimension mismatch");
  for (std::size_t j = 0; j < d; ++j)
    if (!(target[j] > 0.0))
      throw NotInducibleError("bun_to_price: target has a non-positive coordinate " +
                              std::to_string(j));
  if (!prob.feasible.contains(target.entries()))
    throw NotInducibleError("bun_to_price: target lies outside the feasible set");
  if (!(eps > 0.0)) throw_invalid("bun_to_price: eps must be positive");

  const double r_bound = prob.feasible.norm_bound();
  ResolvedBtpBudget sched = resolve_btp_budget(budget, d, prob.params, r_bound, eps, delta);

  sgd::DescentConfig dcfg;
  dcfg.domain = sgd::Domain::nonneg_ball(d, sched.radius);
  dcfg.start = dcfg.domain.project(Vec(d, 1.0));
  dcfg.iterations = sched.descent_iterations;
  dcfg.step = sched.step;
  // Both target and purchase are nonnegative with l2 norm <= R, so the
  // gradient estimate has norm at most sqrt(2) R.
  dcfg.grad_bound = std::sqrt(2.0) * r_bound * (1.0 + 1e-9);
  dcfg.diameter = dcfg.domain.diameter();

  BtpResult out{.price = PriceVector(dcfg.start)};
  DemandOracle& oracle = *prob.oracle;
  const std::uint64_t start_queries = oracle.query_count();
  const std::uint64_t per_restart =
      static_cast<std::uint64_t>(sched.descent_iterations + sched.validation_samples);

  auto estimator = [&](const Vec& p) {
    Bundle purchased = oracle.query(PriceVector(p));
    return dual_gradient_estimate(target, purchased);
  };

  std::size_t restarts_run = 0;
  for (std::size_t l = 0; l < sched.restarts; ++l) {
    if (budget.max_queries > 0) {
      std::uint64_t used = oracle.query_count() - start_queries;
      if (used + per_restart > budget.max_queries) {
        out.budget_warning = true;
        if (restarts_run > 0) break;
        // Nothing finished yet: run one truncated restart with what's left.
        std::uint64_t left = budget.max_queries > used ? budget.max_queries - used : 2;
        sgd::DescentConfig trunc = dcfg;
        trunc.iterations = std::max<std::size_t>(1, static_cast<std::size_t>(left / 2));
        out.candidates.push_back(sgd::sgd_unbiased(estimator, trunc).average);
        ++restarts_run;
        break;
      }
    }
    out.candidates.push_back(sgd::sgd_unbiased(estimator, dcfg).average);
    ++restarts_run;
  }

  std::size_t validation_each = sched.validation_samples;
  if (budget.max_queries > 0) {
    std::uint64_t used = oracle.query_count() - start_queries;
    std::uint64_t left = budget.max_queries > used ? budget.max_queries - used : 0;
    std::uint64_t cap = left / out.candidates.size();
    if (cap < validation_each) {
      validation_each = std::max<std::uint64_t>(1, cap);
      out.budget_warning = true;
    }
  }

  std::size_t best = 0;
  double best_dist = std::numeric_limits<double>::infinity();
  Vec best_mean;
  for (std::size_t l = 0; l < out.candidates.size(); ++l) {
    PriceVector cand(out.candidates[l]);
    Vec mean(d, 0.0);
    for (std::size_t k = 0; k < validation_each; ++k)
      axpy(mean, 1.0, oracle.query(cand).entries());
    mean = scale(mean, 1.0 / static_cast<double>(validation_each));
    double dist = dist2(mean, target.entries());
    out.candidate_distances.push_back(dist);
    out.candidate_means.push_back(mean);
    if (dist < best_dist) {
      best_dist = dist;
      best = l;
      best_mean = mean;
    }
  }

  out.price = PriceVector(out.candidates[best]);
  out.empirical_mean = std::move(best_mean);
  out.validation_distance = best_dist;
  out.queries_used = oracle.query_count() - start_queries;
  return out;
}

}  // namespace dynpricer
