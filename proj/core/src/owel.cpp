#include "dynpricer/owel.hpp"

#include <algorithm>
#include <cmath>

namespace dynpricer {

Vec welfare_supergradient(const PriceVector& p_hat, const CostVector& c) {
  return sub(p_hat.entries(), c.entries());
}

double shrink_loss(double xi, double lambda, double beta, std::size_t d, const CostVector& c) {
  if (xi < 0.0) throw_invalid("shrink_loss: xi must be nonnegative");
  double dd = static_cast<double>(d);
  return lambda * std::pow(dd * xi, beta) + std::sqrt(dd) * xi * norm2(c.entries());
}

double default_shrink(double alpha, double lambda, double beta, std::size_t d,
                      const CostVector& c) {
  if (!(alpha > 0.0)) throw_invalid("default_shrink: alpha must be positive");
  double dd = static_cast<double>(d);
  double denom = 4.0 * lambda * std::pow(dd, beta) + std::sqrt(dd) * norm2(c.entries());
  return std::pow(alpha / denom, 1.0 / beta);
}

double shrink_loss_bound(double alpha, double lambda, double beta, std::size_t d,
                         const CostVector& c) {
  return shrink_loss(default_shrink(alpha, lambda, beta, d, c), lambda, beta, d, c);
}

double holder_modulus(double eps, std::size_t d, double lambda, double beta,
                      const CostVector& c) {
  double dd = static_cast<double>(d);
  return std::pow(dd, 1.0 - beta) * lambda * std::pow(std::sqrt(dd) * eps, beta) +
         norm2(c.entries()) * eps;
}

OwelResolved resolve_owel(const OracleProblem& prob, const CostVector& costs,
                          const SupplyVector& supply, const OwelConfig& cfg) {
  const std::size_t d = prob.feasible.dim();
  const AssumptionParams& ap = prob.params;
  if (!(cfg.alpha > 0.0)) throw_invalid("owel: alpha must be positive");
  if (!(cfg.delta > 0.0) || !(cfg.delta < 1.0)) throw_invalid("owel: delta must lie in (0,1)");
  if (costs.dim() != d || supply.dim() != d) throw_invalid("owel: dimension mismatch");

  OwelResolved r;
  r.xi = cfg.xi.value_or(default_shrink(cfg.alpha, ap.lambda, ap.beta, d, costs));
  if (!(r.xi > 0.0)) throw_invalid("owel: xi must be positive");

  const double dd = static_cast<double>(d);
  const double big_m = std::sqrt(dd) * std::pow(ap.lambda, 1.0 / ap.beta) *
                       std::pow(4.0 * dd / ap.sigma, (1.0 - ap.beta) / ap.beta);
  const double exp_eps = (2.0 - 2.0 * ap.beta) / ap.beta;
  const double eps0 = 0.5 * r.xi;
  const double r_bound = prob.feasible.norm_bound();

  if (cfg.outer_iterations) {
    r.outer_iterations = *cfg.outer_iterations;
  } else {
    double t = cfg.scale * 16.0 * r_bound * r_bound * big_m * big_m /
               (cfg.alpha * cfg.alpha * std::pow(eps0, exp_eps));
    r.outer_iterations = static_cast<std::size_t>(std::clamp(t, 1.0, 1e18));
  }
  if (r.outer_iterations < 1) throw_invalid("owel: outer_iterations must be >= 1");

  if (cfg.eps) {
    r.eps = *cfg.eps;
  } else {
    double radius0 = price_radius(d, ap.lambda, ap.beta, ap.sigma, eps0);
    r.eps = std::min(eps0, cfg.alpha / (8.0 * radius0 *
                                        std::sqrt(static_cast<double>(r.outer_iterations))));
  }
  if (!(r.eps > 0.0)) throw_invalid("owel: eps must be positive");
  // The inner inducing error must be absorbed by the shrink, otherwise the
  // final price cannot be certified supply-feasible.
  if (!(r.xi > r.eps)) throw_invalid("owel: requires xi > eps");

  r.outer_step = cfg.outer_step.value_or(
      r_bound / (std::sqrt(static_cast<double>(r.outer_iterations)) * big_m *
                 std::pow(1.0 / r.eps, exp_eps)));
  if (!(r.outer_step > 0.0)) throw_invalid("owel: outer_step must be positive");

  r.delta_prime = cfg.delta / (static_cast<double>(r.outer_iterations) + 1.0);
  r.price_ball_radius = price_radius(d, ap.lambda, ap.beta, ap.sigma, r.eps);
  r.grad_bound = (r.price_ball_radius + norm2(costs.entries())) * (1.0 + 1e-9);
  r.shrink_loss_value = shrink_loss(r.xi, ap.lambda, ap.beta, d, costs);
  return r;
}

namespace {

// Shrunk domain: Box -> S_xi box; Simplex -> {x in Delta : xi' <= x_j <=
// s_j - xi'}, the simplex analogue with floor xi'.
sgd::Domain shrunk_domain(const FeasibleSet& f, const SupplyVector& s, OwelResolved& r) {
  if (f.kind() == FeasibleSet::Kind::Box) {
    return sgd::Domain::feasible(shrunk_box(f, s, r.xi));
  }
  const std::size_t k = f.dim();
  double xi_p = std::min({r.xi, 1.0 / (2.0 * static_cast<double>(k)),
                          0.5 * s.min_entry() * (1.0 - 1e-9)});
  r.xi_simplex = xi_p;
  Vec lo(k, xi_p), up(k);
  double lo_sum = 0.0, up_sum = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    up[j] = std::min(1.0, s[j]) - xi_p;
    if (!(lo[j] < up[j]))
      throw InfeasibleShrinkError(j, "owel: empty shrunk simplex at coordinate " +
                                         std::to_string(j));
    lo_sum += lo[j];
    up_sum += up[j];
  }
  if (lo_sum > 1.0 || up_sum < 1.0)
    throw InfeasibleShrinkError(0, "owel: shrunk simplex does not intersect the simplex");
  return sgd::Domain::capped_simplex(std::move(lo), std::move(up));
}

}  // namespace

OwelResult owel(const OracleProblem& prob, const CostVector& costs, const SupplyVector& supply,
                const OwelConfig& cfg) {
  OwelResolved resolved = resolve_owel(prob, costs, supply, cfg);
  sgd::Domain domain = shrunk_domain(prob.feasible, supply, resolved);

  OwelTrace trace;
  trace.iterates.reserve(resolved.outer_iterations);
  bool warning = false;
  const std::uint64_t start_queries = prob.oracle->query_count();

  // Ascent on SW as perturbed descent on -SW: the subgradient callback runs
  // the inner layer and the inducing error plays the perturbation role.
  auto subgradient = [&](const Vec& x) {
    BtpResult btp = bun_to_price(prob, Bundle(x), resolved.eps, resolved.delta_prime, cfg.btp);
    warning = warning || btp.budget_warning;
    trace.iterates.push_back(
        {x, btp.price.entries(), prob.oracle->query_count() - start_queries});
    return scale(welfare_supergradient(btp.price, costs), -1.0);
  };
  auto no_perturb = [](const Vec& x) { return Vec(x.size(), 0.0); };

  sgd::DescentConfig dcfg;
  dcfg.iterations = resolved.outer_iterations;
  dcfg.step = resolved.outer_step;
  dcfg.domain = domain;
  dcfg.start = domain.project(prob.feasible.center());
  dcfg.grad_bound = resolved.grad_bound;
  dcfg.diameter = domain.diameter();
  dcfg.perturb_bound = resolved.eps;

  sgd::DescentResult descent = sgd::sgd_perturbed(subgradient, no_perturb, dcfg);
  trace.average_bundle = descent.average;

  BtpResult final_btp =
      bun_to_price(prob, Bundle(descent.average), resolved.eps, resolved.delta_prime, cfg.btp);
  warning = warning || final_btp.budget_warning;

  OwelResult out{.price = std::move(final_btp.price)};
  out.trace = std::move(trace);
  out.resolved = resolved;
  out.queries_used = prob.oracle->query_count() - start_queries;
  out.budget_warning = warning;
  return out;
}

}  // namespace dynpricer
