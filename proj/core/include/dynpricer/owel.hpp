#pragma once

#include <optional>

#include "dynpricer/bun_to_price.hpp"

namespace dynpricer {

// Supergradient of the welfare-as-bundle function at the bundle the given
// prices induce: p_hat - c.
Vec welfare_supergradient(const PriceVector& p_hat, const CostVector& c);

// Welfare lost by optimizing over the shrunk set, evaluated at shrink xi:
// lambda (d xi)^beta + sqrt(d) xi ||c||.
double shrink_loss(double xi, double lambda, double beta, std::size_t d, const CostVector& c);

// Default shrink: xi = (alpha / (4 lambda d^beta + sqrt(d) ||c||))^(1/beta).
double default_shrink(double alpha, double lambda, double beta, std::size_t d,
                      const CostVector& c);

// shrink_loss evaluated at the default shrink for the given alpha.
double shrink_loss_bound(double alpha, double lambda, double beta, std::size_t d,
                         const CostVector& c);

// |SW(x) - SW(y)| bound when ||x - y||_2 <= eps:
// d^(1-beta) lambda (sqrt(d) eps)^beta + ||c|| eps.
double holder_modulus(double eps, std::size_t d, double lambda, double beta, const CostVector& c);

struct OwelConfig {
  double alpha = 0.05;
  double delta = 0.1;
  std::optional<double> xi;            // default: formula above
  std::optional<double> eps;           // default: min(xi/2, alpha/(8 radius sqrt(T)))
  std::optional<std::size_t> outer_iterations;  // default: theory schedule x scale
  std::optional<double> outer_step;             // default: theory schedule
  double scale = 1e-3;
  BtpBudget btp;
};

// The parameter block after applying defaults; what `describe` audits.
struct OwelResolved {
  double xi = 0.0;
  double xi_simplex = 0.0;  // floor used in simplex mode, 0 otherwise
  double eps = 0.0;
  std::size_t outer_iterations = 0;
  double outer_step = 0.0;
  double delta_prime = 0.0;
  double price_ball_radius = 0.0;  // at the resolved eps
  double grad_bound = 0.0;
  double shrink_loss_value = 0.0;
};

OwelResolved resolve_owel(const OracleProblem& prob, const CostVector& costs,
                          const SupplyVector& supply, const OwelConfig& cfg);

struct OwelIterate {
  Vec bundle;  // x_t in S_xi
  Vec price;   // p_t = BunToPrice(x_t)
  std::uint64_t queries_cumulative = 0;
};

struct OwelTrace {
  std::vector<OwelIterate> iterates;
  Vec average_bundle;  // x_bar
};

struct OwelResult {
  PriceVector price;  // p' = BunToPrice(x_bar)
  OwelTrace trace;
  OwelResolved resolved;
  std::uint64_t queries_used = 0;
  bool budget_warning = false;
};

// Outer layer: projected supergradient ascent of SW over the shrunk bundle
// set, x_{t+1} = proj(x_t + eta (p_t - c)) with p_t learned by BunToPrice,
// run through the perturbed-descent engine on -SW; the returned price
// induces the average bundle.
OwelResult owel(const OracleProblem& prob, const CostVector& costs, const SupplyVector& supply,
                const OwelConfig& cfg);

}  // namespace dynpricer
