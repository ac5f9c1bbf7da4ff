#pragma once

// Brute-force and exact oracles used by the acceptance machinery: the
// stochastic convex program SCP(x) behind the welfare-as-bundle function,
// grid cross-checks, the optimal-lottery benchmark, and structural property
// sweeps. Desk scale only (n*d up to ~10^2).

#include <string>

#include "dynpricer/lp.hpp"
#include "dynpricer/market.hpp"

namespace dynpricer {

struct ScpSolution {
  std::vector<Bundle> allocations;  // one per buyer type
  double value = 0.0;               // VAL(target)
  PriceVector dual_prices;
  Vec saturation_residuals;  // weighted demand minus target, per good
  bool converged = false;
  double residual_norm = 0.0;
  bool used_grid_fallback = false;
};

struct ScpOptions {
  double tol = 1e-8;
  std::size_t max_iterations = 200000;
  double step0 = 1.0;       // eta_t = step0 / sqrt(t) in the generic engine
  double price_cap = 1e9;
};

// Maximize sum_i psi_i v_i(x_i) over x_i in F subject to
// sum_i psi_i x_ij <= target_j, solved through the Lagrangian dual: the
// inner maximizer decomposes into per-type quasilinear best responses.
// Separable valuations on a Box dualize coordinatewise and are solved by
// exact bisection; everything else runs dual subgradient descent with
// diminishing steps and averaged duals. Divisible markets only.
ScpSolution solve_scp(const MarketInstance& m, const Bundle& target,
                      const ScpOptions& opts = {});

// Independent primal brute force at the given grid resolution. Supports
// separable mixtures on a Box (coordinatewise grids) and single-type
// instances with d <= 2 (joint grid).
double grid_scp_value(const MarketInstance& m, const Bundle& target, double resolution = 1e-3);

// SW(target) = VAL(target) - <c, target>.
double sw_of_bundle(const MarketInstance& m, const Bundle& target);

// Welfare of the optimal lottery over allocations subject to expected
// supply s. Unit-demand mode: exact LP via the in-repo simplex method.
// Divisible mode: supergradient ascent over {x in F : x <= s} using exact
// dual prices, best iterate kept.
double opt_lottery(const MarketInstance& m, const SupplyVector& s);

// True iff every expected-demand constraint is met with equality.
bool check_saturation(const ScpSolution& sol, const Bundle& target, double tol = 1e-5);

struct StructuralViolation {
  std::string check;
  Vec x, y;
  double lhs = 0.0, rhs = 0.0;
};

struct StructuralReport {
  int trials = 0;
  int concavity_checked = 0, holder_checked = 0, supergradient_checked = 0,
      saturation_checked = 0;
  std::vector<StructuralViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Randomized sweep of the structural lemmas behind the outer layer:
// midpoint concavity of SW, Hoelder continuity of VAL w.r.t. l1, the
// (dual price - cost) supergradient inequality, and supply saturation.
StructuralReport structural_checks(const MarketInstance& m, int trials, Rng& rng,
                                   double tol = 1e-5);

}  // namespace dynpricer
